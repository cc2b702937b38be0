#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace risim {

using cdouble = std::complex<double>;

enum class ErrorKind {
    invalid_dimension,
    domain,
    unsupported_configuration,
    unknown_combination,
    insufficient_elements,
    degenerate_channel,
    bound_invalid,
    empty_aggregate,
    config,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

/// Dense complex matrix stored split (real and imaginary planes), row-major.
/// The split layout is what the vector kernels consume directly.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), re_(rows * cols, 0.0), im_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    cdouble operator()(std::size_t r, std::size_t c) const {
        return {re_[r * cols_ + c], im_[r * cols_ + c]};
    }
    void set(std::size_t r, std::size_t c, cdouble v) {
        re_[r * cols_ + c] = v.real();
        im_[r * cols_ + c] = v.imag();
    }

    std::span<const double> row_re(std::size_t r) const { return {re_.data() + r * cols_, cols_}; }
    std::span<const double> row_im(std::size_t r) const { return {im_.data() + r * cols_, cols_}; }

    std::span<const double> re() const { return re_; }
    std::span<const double> im() const { return im_; }
    std::span<double> re() { return re_; }
    std::span<double> im() { return im_; }

    bool operator==(const ComplexMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> re_;
    std::vector<double> im_;
};

}  // namespace risim
