#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace flash {

// Dense row-major tensor of 64-bit floats. Shape may have any rank;
// a rank-1 tensor doubles as a vector, rank-2 as a matrix (rows, cols).
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;
    Tensor(std::vector<std::size_t> shape_, std::vector<double> data_);

    static Tensor zeros(std::vector<std::size_t> shape);
    static Tensor full(std::vector<std::size_t> shape, double value);
    static Tensor vector(std::vector<double> values);

    std::size_t numel() const { return data.size(); }
    std::size_t ndim() const { return shape.size(); }

    std::size_t rows() const;
    std::size_t cols() const;

    double& operator[](std::size_t i) { return data[i]; }
    double operator[](std::size_t i) const { return data[i]; }

    // 2-D access, row-major
    double& at(std::size_t r, std::size_t c) { return data[r * cols() + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols() + c]; }

    Tensor reshaped(std::vector<std::size_t> new_shape) const;
    Tensor flat() const { return reshaped({numel()}); }

    bool same_shape(const Tensor& other) const { return shape == other.shape; }
};

std::size_t shape_numel(const std::vector<std::size_t>& shape);
std::string shape_str(const std::vector<std::size_t>& shape);

bool all_finite(const Tensor& t);
// Throws std::runtime_error naming `what` if any entry is NaN/Inf.
void require_finite(const Tensor& t, const std::string& what);
void require_same_shape(const Tensor& a, const Tensor& b, const std::string& what);

double dot(const Tensor& a, const Tensor& b);
double squared_norm(const Tensor& t);
double norm(const Tensor& t);
double mean(const Tensor& t);
// a += s * b
void axpy(Tensor& a, double s, const Tensor& b);
void scale(Tensor& t, double s);
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor concat(const Tensor& a, const Tensor& b);

}  // namespace flash
