#pragma once

#include "lvx/matrix.hpp"
#include "lvx/rng.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace lvx {

enum class Activation : std::uint8_t { None = 0, ReLU = 1, Sigmoid = 2, LogSigmoid = 3 };

enum class Mode { Train, Eval };

/// Numerically stable sigmoid / log-sigmoid.
double sigmoid(double x);
double log_sigmoid(double x);

struct DenseLayer {
    Matrix weights;           // fan_in x fan_out
    std::vector<double> bias; // fan_out
    Activation activation = Activation::None;
    double dropout_rate = 0.0; // in [0, 1); applied after the activation

    std::size_t fan_in() const { return weights.rows; }
    std::size_t fan_out() const { return weights.cols; }
};

/// Weights ~ Uniform(-sqrt(1/fan_in), +sqrt(1/fan_in)), bias zero.
/// Deterministic for a fixed rng state.
DenseLayer init_params(std::size_t fan_in, std::size_t fan_out, Activation activation,
                       double dropout_rate, Rng& rng);

/// Everything dense_backward needs. Holds a pointer to the layer it was
/// produced from; the layer must outlive the cache.
struct ForwardCache {
    const DenseLayer* layer = nullptr;
    Matrix input;          // batch x fan_in
    Matrix pre_activation; // z = input * W + b
    Matrix activated;      // act(z), before dropout
    Matrix dropout_mask;   // inverted-dropout scale per element; empty if unused
    Mode mode = Mode::Eval;
};

/// output = dropout(act(input * W + b)). Dropout fires only in Train mode
/// with rate > 0, scaled by 1/(1-rate); Eval mode consumes no rng draws.
Matrix dense_forward(const DenseLayer& layer, const Matrix& input, Mode mode, Rng& rng,
                     ForwardCache* cache = nullptr);

struct LayerGrads {
    Matrix input;             // batch x fan_in
    Matrix weights;           // fan_in x fan_out
    std::vector<double> bias; // fan_out
};

/// Exact analytic gradients of dense_forward, including the dropout mask and
/// the activation derivative (log-sigmoid derivative via sigmoid(-z)).
LayerGrads dense_backward(const ForwardCache& cache, const Matrix& grad_output);

/// Same, but grad is taken w.r.t. the pre-activation z. Used by losses that
/// fold the final activation into their own gradient (BCE over log-sigmoid).
/// Only valid for layers without dropout.
LayerGrads dense_backward_preact(const ForwardCache& cache, const Matrix& grad_preact);

struct MseResult {
    double loss = 0.0;
    Matrix grad; // dLoss/dPred, same shape as pred
};

/// loss = mean((pred - target)^2) over all elements; grad = 2(pred-target)/N.
MseResult loss_mse(const Matrix& pred, const Matrix& target);

struct BceResult {
    double loss = 0.0;
    std::vector<double> grad_logit; // (sigmoid(z) - y) / N
};

/// Binary cross entropy of log-sigmoid outputs, evaluated from the carried
/// pre-sigmoid logits so the result stays finite at saturation.
BceResult loss_bce(std::span<const double> logits, std::span<const int> labels);

struct AdamState {
    std::vector<double> m, v; // first/second moments, one slot per parameter
    long t = 0;
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    AdamState() = default;
    AdamState(std::size_t n, double lr_) : m(n, 0.0), v(n, 0.0), lr(lr_) {}
};

/// One Adam update with bias correction, in place.
void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state);

} // namespace lvx
