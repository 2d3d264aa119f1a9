#ifndef FSDKIT_NETWORK_HPP
#define FSDKIT_NETWORK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fsdkit/rng.hpp"
#include "fsdkit/tensor.hpp"

namespace fsdkit {

enum class LayerKind : std::uint8_t {
    Dense = 0,
    Conv2d = 1,
    Relu = 2,
    Flatten = 3,
    AvgPool = 4,
};

enum class Padding : std::uint8_t { Valid = 0, Same = 1 };

const char* layer_kind_name(LayerKind k);

struct LayerSpec {
    LayerKind kind = LayerKind::Dense;
    // dense
    std::size_t fan_in = 0, fan_out = 0;
    // conv2d (square kernel, stride 1 or 2)
    std::size_t channels_in = 0, channels_out = 0, kernel = 0, stride = 1;
    Padding padding = Padding::Valid;
    // avgpool window; stride equals the window
    std::size_t pool = 2;

    bool has_params() const { return kind == LayerKind::Dense || kind == LayerKind::Conv2d; }

    static LayerSpec dense(std::size_t in, std::size_t out);
    static LayerSpec conv2d(std::size_t cin, std::size_t cout, std::size_t kernel,
                            std::size_t stride = 1, Padding pad = Padding::Same);
    static LayerSpec relu();
    static LayerSpec flatten();
    static LayerSpec avgpool(std::size_t window = 2);
};

/// Output shape of one layer given its input shape.
std::vector<std::size_t> layer_output_shape(const LayerSpec& spec,
                                            const std::vector<std::size_t>& in);

struct LayerParams {
    Tensor weight;  // dense [out,in]; conv [co,ci,k,k]
    Tensor bias;    // [out] / [co]

    std::size_t count() const { return weight.numel() + bias.numel(); }
};

/// Parameters of a multi-headed network: the last arch layer must be dense
/// and is replicated once per head; all heads share the trunk.
struct NetworkParams {
    std::vector<LayerSpec> arch;
    std::vector<std::size_t> input_shape;  // [d] or [C,H,W]
    std::vector<LayerParams> trunk;        // parameterized layers except the head layer
    std::vector<LayerParams> heads;        // one per head, shaped like the last arch layer

    std::size_t head_count() const { return heads.size(); }
    std::size_t param_count() const;                // P: trunk + every head
    std::vector<std::size_t> layer_param_counts() const;  // p_l (head layer = all heads)
    bool same_arch(const NetworkParams& o) const;
};

/// Shape entering each arch layer; result[arch.size()] is the output shape.
std::vector<std::vector<std::size_t>> infer_shapes(const std::vector<LayerSpec>& arch,
                                                   const std::vector<std::size_t>& input);

void validate_arch(const std::vector<LayerSpec>& arch,
                   const std::vector<std::size_t>& input);

/// Builds a network with Kaiming-uniform weights (bound sqrt(6/fan_in)) and
/// zero biases.
NetworkParams init_network(std::vector<LayerSpec> arch,
                           std::vector<std::size_t> input_shape, std::size_t heads,
                           Rng& rng);

/// Convenience MLP: dense(widths[0]->widths[1]), relu, ..., dense head.
std::vector<LayerSpec> mlp_arch(const std::vector<std::size_t>& widths);

// -- parameter-vector arithmetic (gradients reuse NetworkParams shapes) -------

NetworkParams zeros_like(const NetworkParams& p);
void params_axpy(NetworkParams& acc, double s, const NetworkParams& g);
void params_scale(NetworkParams& p, double s);
double params_dot(const NetworkParams& a, const NetworkParams& b);
double params_squared_norm(const NetworkParams& p);
NetworkParams params_sub(const NetworkParams& a, const NetworkParams& b);
/// Visits every parameter tensor in a fixed order (trunk, then heads).
template <typename F>
void for_each_param(NetworkParams& p, F&& f) {
    for (auto& lp : p.trunk) {
        f(lp.weight);
        f(lp.bias);
    }
    for (auto& lp : p.heads) {
        f(lp.weight);
        f(lp.bias);
    }
}
template <typename F>
void for_each_param(const NetworkParams& p, F&& f) {
    for (const auto& lp : p.trunk) {
        f(lp.weight);
        f(lp.bias);
    }
    for (const auto& lp : p.heads) {
        f(lp.weight);
        f(lp.bias);
    }
}

// -- forward / backward / jvp --------------------------------------------------

struct ForwardTrace {
    /// values[l] is the input of arch layer l; values[arch.size()] is z.
    std::vector<Tensor> values;
    std::size_t head = 0;

    const Tensor& output() const { return values.back(); }
};

ForwardTrace forward(const NetworkParams& params, const Tensor& x, std::size_t head = 0);

/// d(output_grad . z)/dtheta. Only the used head receives nonzero gradients.
NetworkParams backward(const NetworkParams& params, const ForwardTrace& trace,
                       const Tensor& output_grad);

/// J_theta f(x, theta) v with v shaped like the parameters.
Tensor jvp(const NetworkParams& params, const Tensor& x, const NetworkParams& direction,
           std::size_t head = 0);

// -- layer primitives shared with the estimators -------------------------------

Tensor apply_linear(const LayerSpec& spec, const Tensor& w, const Tensor& b,
                    const Tensor& x);
Tensor apply_linear_nobias(const LayerSpec& spec, const Tensor& w, const Tensor& x);
/// relu / flatten / avgpool forward.
Tensor apply_structural(const LayerSpec& spec, const Tensor& x);
/// flatten / avgpool are linear; applies them to a difference stream.
Tensor apply_structural_linear(const LayerSpec& spec, const Tensor& x);

/// Indices of ReLU layers in the arch, in order.
std::vector<std::size_t> relu_layer_indices(const std::vector<LayerSpec>& arch);

/// Bernoulli-stat width per ReLU layer: unit count for 1-D inputs, channel
/// count for CHW inputs.
std::vector<std::size_t> relu_stat_sizes(const NetworkParams& params);

// -- serialization --------------------------------------------------------------

void write_params_body(class ByteWriter& w, const NetworkParams& p);
NetworkParams read_params_body(class ByteReader& r);
void save_params(const NetworkParams& p, const std::string& path);
NetworkParams load_params(const std::string& path);

}  // namespace fsdkit

#endif
