#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "lomni/errors.hpp"
#include "lomni/rng.hpp"

namespace lomni {

class Tensor;
using TensorPtr = std::shared_ptr<Tensor>;

// Dense row-major matrix of 64-bit floats. Scalars are [1x1], row vectors [1xn].
// grad is allocated (zeroed) iff requires_grad; accumulation into grad is
// additive and the caller zeroes it explicitly.
class Tensor {
public:
    Tensor(int64_t rows, int64_t cols, bool requires_grad = false)
        : rows_(rows), cols_(cols), requires_grad(requires_grad) {
        if (rows <= 0 || cols <= 0)
            throw ShapeError("tensor dimensions must be positive, got [" + std::to_string(rows) +
                             "x" + std::to_string(cols) + "]");
        data.assign(static_cast<size_t>(rows * cols), 0.0);
        if (requires_grad) grad.assign(data.size(), 0.0);
    }

    int64_t rows() const { return rows_; }
    int64_t cols() const { return cols_; }
    int64_t size() const { return rows_ * cols_; }
    std::string shape_str() const {
        return "[" + std::to_string(rows_) + "x" + std::to_string(cols_) + "]";
    }

    double& at(int64_t r, int64_t c) { return data[static_cast<size_t>(r * cols_ + c)]; }
    double at(int64_t r, int64_t c) const { return data[static_cast<size_t>(r * cols_ + c)]; }

    void zero_grad() {
        if (requires_grad) grad.assign(data.size(), 0.0);
    }

    // Throws NumericError naming `what` if any element is NaN or infinite.
    void ensure_finite(const std::string& what) const;

    static TensorPtr zeros(int64_t rows, int64_t cols, bool rg = false) {
        return std::make_shared<Tensor>(rows, cols, rg);
    }
    static TensorPtr full(int64_t rows, int64_t cols, double value, bool rg = false);
    static TensorPtr scalar(double value, bool rg = false) { return full(1, 1, value, rg); }
    static TensorPtr from_row(const std::vector<double>& values, bool rg = false);
    static TensorPtr from_rows(const std::vector<std::vector<double>>& rows, bool rg = false);
    static TensorPtr randn(int64_t rows, int64_t cols, Rng& rng, double stddev = 1.0,
                           bool rg = false);

    std::vector<double> data;
    std::vector<double> grad;
    bool requires_grad;

private:
    int64_t rows_;
    int64_t cols_;
};

// Records one backward closure per operation, in construction order. Because
// every operation's inputs exist before its output, reverse replay is a valid
// topological traversal that touches each node exactly once.
class Tape {
public:
    bool grad_enabled() const { return grad_enabled_; }
    void set_grad_enabled(bool on) { grad_enabled_ = on; }

    // When set, every recorded op validates its output for NaN/inf.
    bool check_finite = false;

    void record(std::function<void()> backward_fn) { nodes_.push_back(std::move(backward_fn)); }

    size_t node_count() const { return nodes_.size(); }
    void clear() { nodes_.clear(); }

    // Seeds root->grad with 1 and replays all recorded closures in reverse.
    // root must be a [1x1] tensor with requires_grad.
    void backward(const TensorPtr& root);

private:
    std::vector<std::function<void()>> nodes_;
    bool grad_enabled_ = true;
};

// RAII guard for temporarily disabling gradient recording on a tape.
class NoGradGuard {
public:
    explicit NoGradGuard(Tape& tape) : tape_(tape), was_(tape.grad_enabled()) {
        tape_.set_grad_enabled(false);
    }
    ~NoGradGuard() { tape_.set_grad_enabled(was_); }

private:
    Tape& tape_;
    bool was_;
};

}  // namespace lomni
