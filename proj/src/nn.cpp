#include "lvx/nn.hpp"

#include "lvx/errors.hpp"

#include <cmath>
#include <string>

namespace lvx {

double sigmoid(double x) {
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

double log_sigmoid(double x) {
    // log(1/(1+e^-x)) without overflow on either tail.
    if (x >= 0.0) return -std::log1p(std::exp(-x));
    return x - std::log1p(std::exp(x));
}

DenseLayer init_params(std::size_t fan_in, std::size_t fan_out, Activation activation,
                       double dropout_rate, Rng& rng) {
    if (fan_in == 0 || fan_out == 0)
        throw ValidationError("init_params: layer dims must be >= 1");
    if (dropout_rate < 0.0 || dropout_rate >= 1.0)
        throw ValidationError("init_params: dropout_rate must be in [0, 1)");
    DenseLayer layer;
    layer.weights = Matrix(fan_in, fan_out);
    const double bound = std::sqrt(1.0 / static_cast<double>(fan_in));
    for (double& w : layer.weights.data) w = rng.next_uniform(-bound, bound);
    layer.bias.assign(fan_out, 0.0);
    layer.activation = activation;
    layer.dropout_rate = dropout_rate;
    return layer;
}

namespace {

void apply_activation(Activation act, Matrix& z) {
    switch (act) {
    case Activation::None:
        break;
    case Activation::ReLU:
        for (double& x : z.data) x = x > 0.0 ? x : 0.0;
        break;
    case Activation::Sigmoid:
        for (double& x : z.data) x = sigmoid(x);
        break;
    case Activation::LogSigmoid:
        for (double& x : z.data) x = log_sigmoid(x);
        break;
    }
}

// dAct/dz evaluated from the cached pre-activation.
double activation_derivative(Activation act, double z) {
    switch (act) {
    case Activation::None:
        return 1.0;
    case Activation::ReLU:
        return z > 0.0 ? 1.0 : 0.0;
    case Activation::Sigmoid: {
        const double s = sigmoid(z);
        return s * (1.0 - s);
    }
    case Activation::LogSigmoid:
        return sigmoid(-z);
    }
    return 1.0;
}

} // namespace

Matrix dense_forward(const DenseLayer& layer, const Matrix& input, Mode mode, Rng& rng,
                     ForwardCache* cache) {
    if (input.cols != layer.fan_in())
        throw DimensionError("dense_forward: input width " + std::to_string(input.cols) +
                             " != fan_in " + std::to_string(layer.fan_in()));
    if (layer.bias.size() != layer.fan_out())
        throw DimensionError("dense_forward: bias size does not match fan_out");
    require_finite(input, "dense_forward input");

    Matrix z = matmul(input, layer.weights);
    for (std::size_t i = 0; i < z.rows; ++i) {
        double* row = z.data.data() + i * z.cols;
        for (std::size_t j = 0; j < z.cols; ++j) row[j] += layer.bias[j];
    }

    Matrix pre;
    if (cache) pre = z; // copy before the activation overwrites z
    apply_activation(layer.activation, z);
    Matrix activated;
    if (cache) activated = z;

    Matrix mask;
    if (mode == Mode::Train && layer.dropout_rate > 0.0) {
        mask = Matrix(z.rows, z.cols);
        const double keep_scale = 1.0 / (1.0 - layer.dropout_rate);
        for (std::size_t i = 0; i < mask.size(); ++i)
            mask.data[i] = rng.next_unit() < layer.dropout_rate ? 0.0 : keep_scale;
        for (std::size_t i = 0; i < z.size(); ++i) z.data[i] *= mask.data[i];
    }

    if (cache) {
        cache->layer = &layer;
        cache->input = input;
        cache->pre_activation = std::move(pre);
        cache->activated = std::move(activated);
        cache->dropout_mask = std::move(mask);
        cache->mode = mode;
    }
    return z;
}

namespace {

LayerGrads backward_from_preact_grad(const ForwardCache& cache, Matrix grad_z) {
    const DenseLayer& layer = *cache.layer;
    LayerGrads g;
    g.weights = matmul_tn(cache.input, grad_z);
    g.bias.assign(layer.fan_out(), 0.0);
    for (std::size_t i = 0; i < grad_z.rows; ++i) {
        const double* row = grad_z.data.data() + i * grad_z.cols;
        for (std::size_t j = 0; j < grad_z.cols; ++j) g.bias[j] += row[j];
    }
    g.input = matmul_nt(grad_z, layer.weights);
    return g;
}

} // namespace

LayerGrads dense_backward(const ForwardCache& cache, const Matrix& grad_output) {
    if (cache.layer == nullptr)
        throw ValidationError("dense_backward: cache was not produced by dense_forward");
    if (grad_output.rows != cache.pre_activation.rows ||
        grad_output.cols != cache.pre_activation.cols)
        throw DimensionError("dense_backward: grad_output shape does not match forward output");
    require_finite(grad_output, "dense_backward grad_output");

    Matrix grad_z = grad_output;
    if (!cache.dropout_mask.empty())
        for (std::size_t i = 0; i < grad_z.size(); ++i)
            grad_z.data[i] *= cache.dropout_mask.data[i];
    const Activation act = cache.layer->activation;
    if (act != Activation::None)
        for (std::size_t i = 0; i < grad_z.size(); ++i)
            grad_z.data[i] *= activation_derivative(act, cache.pre_activation.data[i]);
    return backward_from_preact_grad(cache, std::move(grad_z));
}

LayerGrads dense_backward_preact(const ForwardCache& cache, const Matrix& grad_preact) {
    if (cache.layer == nullptr)
        throw ValidationError("dense_backward_preact: cache was not produced by dense_forward");
    if (!cache.dropout_mask.empty())
        throw ValidationError("dense_backward_preact: layer has an active dropout mask");
    if (grad_preact.rows != cache.pre_activation.rows ||
        grad_preact.cols != cache.pre_activation.cols)
        throw DimensionError("dense_backward_preact: grad shape does not match forward output");
    require_finite(grad_preact, "dense_backward_preact grad");
    return backward_from_preact_grad(cache, grad_preact);
}

MseResult loss_mse(const Matrix& pred, const Matrix& target) {
    if (!pred.same_shape(target))
        throw DimensionError("loss_mse: pred and target shapes differ");
    if (pred.empty())
        throw ValidationError("loss_mse: empty input");
    require_finite(pred, "loss_mse pred");
    require_finite(target, "loss_mse target");

    MseResult r;
    r.grad = Matrix(pred.rows, pred.cols);
    const double n = static_cast<double>(pred.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        const double d = pred.data[i] - target.data[i];
        acc += d * d;
        r.grad.data[i] = 2.0 * d / n;
    }
    r.loss = acc / n;
    return r;
}

BceResult loss_bce(std::span<const double> logits, std::span<const int> labels) {
    if (logits.size() != labels.size())
        throw DimensionError("loss_bce: logits and labels lengths differ");
    if (logits.empty())
        throw ValidationError("loss_bce: empty input");
    require_finite(logits, "loss_bce logits");

    BceResult r;
    r.grad_logit.resize(logits.size());
    const double n = static_cast<double>(logits.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        const int y = labels[i];
        if (y != 0 && y != 1)
            throw ValidationError("loss_bce: label not in {0,1} at index " + std::to_string(i));
        const double z = logits[i];
        // y*softplus(-z) + (1-y)*softplus(z), with softplus via log1p.
        acc += y ? -log_sigmoid(z) : -log_sigmoid(-z);
        r.grad_logit[i] = (sigmoid(z) - static_cast<double>(y)) / n;
    }
    r.loss = acc / n;
    return r;
}

void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state) {
    if (params.size() != grads.size() || params.size() != state.m.size() ||
        params.size() != state.v.size())
        throw DimensionError("adam_step: params/grads/state sizes differ");
    require_finite(grads, "adam_step grads");

    state.t += 1;
    const double b1 = state.beta1, b2 = state.beta2;
    const double bc1 = 1.0 - std::pow(b1, static_cast<double>(state.t));
    const double bc2 = 1.0 - std::pow(b2, static_cast<double>(state.t));
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double g = grads[i];
        state.m[i] = b1 * state.m[i] + (1.0 - b1) * g;
        state.v[i] = b2 * state.v[i] + (1.0 - b2) * g * g;
        const double m_hat = state.m[i] / bc1;
        const double v_hat = state.v[i] / bc2;
        params[i] -= state.lr * m_hat / (std::sqrt(v_hat) + state.epsilon);
    }
}

} // namespace lvx
