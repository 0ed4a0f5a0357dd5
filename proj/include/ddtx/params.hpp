#ifndef DDTX_PARAMS_HPP
#define DDTX_PARAMS_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ddtx/errors.hpp"
#include "ddtx/mat.hpp"
#include "ddtx/rng.hpp"

namespace ddtx {

struct ModelConfig {
    int vocab_size = 0;
    int d_embed = 32;    // embedding width; the diffusion acts in this space
    int d_model = 64;    // transformer width
    int n_layers = 2;
    int n_heads = 4;
    int d_ff = 256;
    int l_max = 32;      // per-span length budget (condition span and target span)

    void validate() const {
        if (vocab_size < 6) throw UsageError("model config: vocab_size must cover the special tokens");
        if (n_layers < 1) throw UsageError("model config: n_layers must be >= 1");
        if (d_embed < 1 || d_model < 1 || d_ff < 1 || l_max < 2)
            throw UsageError("model config: dimensions must be positive");
        if (d_model % n_heads != 0) throw UsageError("model config: d_model must be divisible by n_heads");
        if (d_model % 2 != 0) throw UsageError("model config: d_model must be even");
    }
};

/// A named parameter tensor (rank 1 or 2).  Order of declaration inside
/// DenoiserParams is the serialization order of the checkpoint container.
template <typename T>
struct Tensor {
    std::string name;
    std::vector<uint32_t> dims;
    std::vector<T> v;

    Tensor() = default;
    Tensor(std::string n, uint32_t r, uint32_t c)
        : name(std::move(n)), dims{r, c}, v(static_cast<size_t>(r) * c, T(0)) {}
    Tensor(std::string n, uint32_t r) : name(std::move(n)), dims{r}, v(r, T(0)) {}

    int rows() const { return static_cast<int>(dims[0]); }
    int cols() const { return dims.size() > 1 ? static_cast<int>(dims[1]) : 1; }
    size_t size() const { return v.size(); }

    Mat<T> as_mat() const {
        Mat<T> m(rows(), cols());
        m.a = v;
        return m;
    }
};

// Per-layer tensor offsets relative to the first layer tensor.
enum LayerSlot : int {
    L_LN1_G = 0, L_LN1_B,
    L_Q_W, L_Q_B, L_K_W, L_K_B, L_V_W, L_V_B, L_O_W, L_O_B,
    L_LN2_G, L_LN2_B,
    L_FF1_W, L_FF1_B, L_FF2_W, L_FF2_B,
    LAYER_SLOTS
};

/// All learnable state of the denoiser: token embeddings, the sequence
/// model, the time-embedding affine, the d<->d_model projections, and the
/// shallow rounding decoder.
template <typename T>
struct DenoiserParams {
    ModelConfig cfg;
    std::vector<Tensor<T>> tensors;

    DenoiserParams() = default;

    explicit DenoiserParams(const ModelConfig& c) : cfg(c) {
        cfg.validate();
        const auto V = static_cast<uint32_t>(cfg.vocab_size);
        const auto d = static_cast<uint32_t>(cfg.d_embed);
        const auto dm = static_cast<uint32_t>(cfg.d_model);
        const auto dff = static_cast<uint32_t>(cfg.d_ff);
        tensors.emplace_back("embedding", V, d);
        tensors.emplace_back("in_proj_w", dm, d);
        tensors.emplace_back("in_proj_b", dm);
        tensors.emplace_back("time_w", dm, dm);
        tensors.emplace_back("time_b", dm);
        for (int l = 0; l < cfg.n_layers; ++l) {
            const std::string p = "layer" + std::to_string(l) + ".";
            tensors.emplace_back(p + "ln1_g", dm);
            tensors.emplace_back(p + "ln1_b", dm);
            tensors.emplace_back(p + "q_w", dm, dm);
            tensors.emplace_back(p + "q_b", dm);
            tensors.emplace_back(p + "k_w", dm, dm);
            tensors.emplace_back(p + "k_b", dm);
            tensors.emplace_back(p + "v_w", dm, dm);
            tensors.emplace_back(p + "v_b", dm);
            tensors.emplace_back(p + "o_w", dm, dm);
            tensors.emplace_back(p + "o_b", dm);
            tensors.emplace_back(p + "ln2_g", dm);
            tensors.emplace_back(p + "ln2_b", dm);
            tensors.emplace_back(p + "ff1_w", dff, dm);
            tensors.emplace_back(p + "ff1_b", dff);
            tensors.emplace_back(p + "ff2_w", dm, dff);
            tensors.emplace_back(p + "ff2_b", dm);
        }
        tensors.emplace_back("lnf_g", dm);
        tensors.emplace_back("lnf_b", dm);
        tensors.emplace_back("out_proj_w", d, dm);
        tensors.emplace_back("out_proj_b", d);
        tensors.emplace_back("dec_w", V, d);
        tensors.emplace_back("dec_b", V);
    }

    // Fixed indices into `tensors`.
    static constexpr int T_EMBED = 0;
    static constexpr int T_IN_W = 1;
    static constexpr int T_IN_B = 2;
    static constexpr int T_TIME_W = 3;
    static constexpr int T_TIME_B = 4;
    static constexpr int T_LAYER0 = 5;
    int layer_base(int l) const { return T_LAYER0 + l * LAYER_SLOTS; }
    int t_lnf_g() const { return T_LAYER0 + cfg.n_layers * LAYER_SLOTS; }
    int t_lnf_b() const { return t_lnf_g() + 1; }
    int t_out_w() const { return t_lnf_g() + 2; }
    int t_out_b() const { return t_lnf_g() + 3; }
    int t_dec_w() const { return t_lnf_g() + 4; }
    int t_dec_b() const { return t_lnf_g() + 5; }

    Tensor<T>& at(int i) { return tensors[static_cast<size_t>(i)]; }
    const Tensor<T>& at(int i) const { return tensors[static_cast<size_t>(i)]; }

    const T* embedding_row(int id) const {
        return at(T_EMBED).v.data() + static_cast<size_t>(id) * cfg.d_embed;
    }

    long long count_params() const {
        long long n = 0;
        for (const auto& t : tensors) n += static_cast<long long>(t.size());
        return n;
    }

    bool finite() const {
        for (const auto& t : tensors)
            for (const T& x : t.v)
                if (!std::isfinite(static_cast<double>(x))) return false;
        return true;
    }

    /// Zeroed copy with identical shapes; used for gradients and moments.
    DenoiserParams<T> zeros_like() const {
        DenoiserParams<T> g = *this;
        for (auto& t : g.tensors) std::fill(t.v.begin(), t.v.end(), T(0));
        return g;
    }

    void zero() {
        for (auto& t : tensors) std::fill(t.v.begin(), t.v.end(), T(0));
    }
};

/// Glorot-uniform weights, zero biases, unit-normal token embeddings,
/// unit layer-norm gains.
template <typename T>
inline DenoiserParams<T> init_params(const ModelConfig& cfg, uint64_t seed) {
    DenoiserParams<T> p(cfg);
    Rng rng = Rng::stream(seed, 0x494e4954 /* "INIT" */);
    for (auto& t : p.tensors) {
        const bool is_gain = t.name.size() >= 2 && (t.name.substr(t.name.size() - 2) == "_g");
        const bool is_bias = t.dims.size() == 1;
        if (t.name == "embedding") {
            for (T& x : t.v) x = static_cast<T>(rng.normal());
        } else if (is_gain) {
            std::fill(t.v.begin(), t.v.end(), T(1));
        } else if (is_bias) {
            // zeros
        } else {
            const double s = std::sqrt(6.0 / (t.rows() + t.cols()));
            for (T& x : t.v) x = static_cast<T>((rng.uniform() * 2.0 - 1.0) * s);
        }
    }
    return p;
}

}  // namespace ddtx

#endif  // DDTX_PARAMS_HPP
