#pragma once

#include <cstdint>
#include <vector>

#include "lomni/tensor.hpp"

namespace lomni::ops {

// Dense reverse-mode ops. Every function computes the forward value and, when
// the tape has gradients enabled and an input requires grad, records a
// backward closure that accumulates additively into input grads.

TensorPtr matmul(Tape& tape, const TensorPtr& a, const TensorPtr& b);
TensorPtr transpose(Tape& tape, const TensorPtr& a);

TensorPtr add(Tape& tape, const TensorPtr& a, const TensorPtr& b);
TensorPtr sub(Tape& tape, const TensorPtr& a, const TensorPtr& b);
TensorPtr mul(Tape& tape, const TensorPtr& a, const TensorPtr& b);
TensorPtr scale(Tape& tape, const TensorPtr& a, double c);

// bias broadcast over rows: out[i,:] = a[i,:] + bias[0,:]
TensorPtr add_rowwise(Tape& tape, const TensorPtr& a, const TensorPtr& bias);

// s is [1x1]; broadcast multiply / divide.
TensorPtr mul_scalar(Tape& tape, const TensorPtr& a, const TensorPtr& s);
TensorPtr div_scalar(Tape& tape, const TensorPtr& a, const TensorPtr& s);

TensorPtr exp_elem(Tape& tape, const TensorPtr& a);
// Gradient passes through strictly inside (lo, hi), zero outside.
TensorPtr clamp(Tape& tape, const TensorPtr& a, double lo, double hi);

TensorPtr concat_rows(Tape& tape, const std::vector<TensorPtr>& parts);
TensorPtr concat_cols(Tape& tape, const std::vector<TensorPtr>& parts);
TensorPtr slice_rows(Tape& tape, const TensorPtr& a, int64_t r0, int64_t r1);
TensorPtr slice_cols(Tape& tape, const TensorPtr& a, int64_t c0, int64_t c1);

// Max-subtracted row softmax; rows sum to 1.
TensorPtr softmax_rows(Tape& tape, const TensorPtr& a);

// Per-row normalization with learnable gain/bias, both [1xn].
TensorPtr layer_norm(Tape& tape, const TensorPtr& x, const TensorPtr& gain, const TensorPtr& bias,
                     double eps = 1e-5);

// Exact erf-based GELU.
TensorPtr gelu(Tape& tape, const TensorPtr& x);

// Row gather from table [Vxd]; backward scatters into the table.
TensorPtr embedding(Tape& tape, const TensorPtr& table, const std::vector<int64_t>& ids);

// Mean of -log softmax(logits)[target] over rows where mask is nonzero
// (empty mask = all rows). Stable via per-row max subtraction.
TensorPtr cross_entropy_mean(Tape& tape, const TensorPtr& logits,
                             const std::vector<int64_t>& targets,
                             const std::vector<uint8_t>& mask = {});

TensorPtr l2_norm_rows(Tape& tape, const TensorPtr& x);  // [mxn] -> [mx1]
// Rows scaled to unit L2 norm; zero-norm rows are a data error.
TensorPtr normalize_rows(Tape& tape, const TensorPtr& x);

TensorPtr sum_all(Tape& tape, const TensorPtr& x);   // -> [1x1]
TensorPtr mean_all(Tape& tape, const TensorPtr& x);  // -> [1x1]

// Per row, maps each adjacent pair (a, b) to (-b, a). Columns must be even.
TensorPtr rotate_pairs(Tape& tape, const TensorPtr& x);

// Incremental attention over cached rows: scores[0,j] = c * dot(q, keys[j]).
TensorPtr attend_scores(Tape& tape, const TensorPtr& q, const std::vector<TensorPtr>& keys,
                        double c);
// out = sum_j w[0,j] * values[j], each value a [1xd] row.
TensorPtr attend_mix(Tape& tape, const TensorPtr& w, const std::vector<TensorPtr>& values);

// dot(u,v) / (|u||v|) for [1xd] rows -> [1x1]. Zero norms are a data error.
TensorPtr cosine_similarity(Tape& tape, const TensorPtr& u, const TensorPtr& v);

inline double scalar_value(const TensorPtr& t) { return t->data[0]; }

}  // namespace lomni::ops
