#include "lomni/tensor.hpp"

#include <cmath>

namespace lomni {

void Tensor::ensure_finite(const std::string& what) const {
    for (size_t i = 0; i < data.size(); ++i) {
        if (!std::isfinite(data[i])) {
            throw NumericError(what + ": element " + std::to_string(i) + " of " + shape_str() +
                               " is " + std::to_string(data[i]));
        }
    }
}

TensorPtr Tensor::full(int64_t rows, int64_t cols, double value, bool rg) {
    auto t = std::make_shared<Tensor>(rows, cols, rg);
    t->data.assign(t->data.size(), value);
    return t;
}

TensorPtr Tensor::from_row(const std::vector<double>& values, bool rg) {
    if (values.empty()) throw ShapeError("from_row: empty input");
    auto t = std::make_shared<Tensor>(1, static_cast<int64_t>(values.size()), rg);
    t->data = values;
    if (rg) t->grad.assign(values.size(), 0.0);
    return t;
}

TensorPtr Tensor::from_rows(const std::vector<std::vector<double>>& rows, bool rg) {
    if (rows.empty() || rows[0].empty()) throw ShapeError("from_rows: empty input");
    const int64_t m = static_cast<int64_t>(rows.size());
    const int64_t n = static_cast<int64_t>(rows[0].size());
    auto t = std::make_shared<Tensor>(m, n, rg);
    for (int64_t i = 0; i < m; ++i) {
        if (static_cast<int64_t>(rows[i].size()) != n)
            throw ShapeError("from_rows: ragged rows (" + std::to_string(rows[i].size()) +
                             " vs " + std::to_string(n) + ")");
        for (int64_t j = 0; j < n; ++j) t->at(i, j) = rows[i][j];
    }
    return t;
}

TensorPtr Tensor::randn(int64_t rows, int64_t cols, Rng& rng, double stddev, bool rg) {
    auto t = std::make_shared<Tensor>(rows, cols, rg);
    for (auto& x : t->data) x = rng.normal(0.0, stddev);
    return t;
}

void Tape::backward(const TensorPtr& root) {
    if (root->rows() != 1 || root->cols() != 1)
        throw ContractError("backward: root must be scalar, got " + root->shape_str());
    if (!root->requires_grad)
        throw ContractError("backward: root does not require grad");
    root->grad[0] += 1.0;
    for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) (*it)();
}

}  // namespace lomni
