#ifndef DDTX_CODEC_HPP
#define DDTX_CODEC_HPP

#include <string>
#include <vector>

#include "ddtx/mat.hpp"
#include "ddtx/params.hpp"
#include "ddtx/vocab.hpp"

namespace ddtx {

/// Unpadded token ids: always starts with BOS and ends with EOS, length
/// <= l_max.  Padding to the span budget happens at embed time.
struct TokenSequence {
    std::vector<int> ids;

    int length() const { return static_cast<int>(ids.size()); }
    bool operator==(const TokenSequence& o) const { return ids == o.ids; }
};

/// Lowercased whitespace tokenization with BOS/EOS framing.  Total: OOV maps
/// to UNK, overlong input is truncated with EOS forced at position l_max-1.
inline TokenSequence tokenize(const std::string& sentence, const Vocabulary& vocab, int l_max) {
    TokenSequence seq;
    seq.ids.push_back(TOK_BOS);
    for (const std::string& w : split_words(lowercase(sentence))) {
        if (seq.length() >= l_max - 1) break;
        seq.ids.push_back(vocab.id_of(w));
    }
    seq.ids.push_back(TOK_EOS);
    return seq;
}

/// Inverse of tokenize up to casing: joins non-structural tokens with spaces.
inline std::string detokenize(const TokenSequence& seq, const Vocabulary& vocab) {
    std::string out;
    for (int id : seq.ids) {
        if (id == TOK_BOS || id == TOK_EOS || id == TOK_PAD) continue;
        if (!out.empty()) out += ' ';
        out += vocab.token_of(id);
    }
    return out;
}

/// A stack of embedding vectors with per-position roles.  condition
/// positions are never noised; pad positions are skipped by attention.
template <typename T>
struct EmbeddedSequence {
    Mat<T> vectors;                      // L x d_embed
    std::vector<uint8_t> condition_mask; // true = condition position
    std::vector<uint8_t> pad_mask;       // true = padding

    int length() const { return vectors.rows; }

    bool is_generated(int i) const { return !condition_mask[static_cast<size_t>(i)] && !pad_mask[static_cast<size_t>(i)]; }
};

/// Embedding lookup padded to the span budget; pad positions carry the PAD
/// embedding row.
template <typename T>
inline EmbeddedSequence<T> embed(const TokenSequence& seq, const DenoiserParams<T>& params) {
    const int L = params.cfg.l_max;
    const int d = params.cfg.d_embed;
    for (int id : seq.ids)
        if (id < 0 || id >= params.cfg.vocab_size) throw UsageError("invalid token id");

    EmbeddedSequence<T> e;
    e.vectors.resize(L, d);
    e.condition_mask.assign(static_cast<size_t>(L), 0);
    e.pad_mask.assign(static_cast<size_t>(L), 0);
    for (int i = 0; i < L; ++i) {
        const int id = i < seq.length() ? seq.ids[static_cast<size_t>(i)] : TOK_PAD;
        const T* row = params.embedding_row(id);
        std::copy(row, row + d, e.vectors.row(i));
        if (i >= seq.length()) e.pad_mask[static_cast<size_t>(i)] = 1;
    }
    return e;
}

/// The shallow rounding decoder: one affine layer d -> |V|, argmax per
/// position (ties to the lowest id), output truncated at the first EOS and
/// normalized to BOS-initial form.
template <typename T>
inline TokenSequence decode_rounding(const Mat<T>& vectors, const DenoiserParams<T>& params) {
    if (!vectors.finite()) throw std::runtime_error("non-finite embedding");
    const auto& w = params.at(params.t_dec_w());
    const auto& b = params.at(params.t_dec_b());
    const int V = params.cfg.vocab_size;
    const int d = params.cfg.d_embed;

    TokenSequence out;
    out.ids.push_back(TOK_BOS);
    for (int i = 1; i < vectors.rows; ++i) {
        const T* x = vectors.row(i);
        int best = 0;
        T best_score = dot(x, w.v.data(), d) + b.v[0];
        for (int v = 1; v < V; ++v) {
            T s = dot(x, w.v.data() + static_cast<size_t>(v) * d, d) + b.v[static_cast<size_t>(v)];
            if (s > best_score) {
                best_score = s;
                best = v;
            }
        }
        if (best == TOK_EOS) break;
        out.ids.push_back(best);
    }
    out.ids.push_back(TOK_EOS);
    return out;
}

template <typename T>
inline TokenSequence decode_rounding(const EmbeddedSequence<T>& emb, const DenoiserParams<T>& params) {
    return decode_rounding(emb.vectors, params);
}

}  // namespace ddtx

#endif  // DDTX_CODEC_HPP
