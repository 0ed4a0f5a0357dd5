#ifndef DDTX_VOCAB_HPP
#define DDTX_VOCAB_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "ddtx/errors.hpp"

namespace ddtx {

/// Token ids for the five reserved tokens.  They occupy ids 0..4 in every
/// vocabulary, in this order.
enum SpecialToken : int {
    TOK_PAD = 0,
    TOK_BOS = 1,
    TOK_EOS = 2,
    TOK_UNK = 3,
    TOK_NULLCOND = 4,
};

inline const std::vector<std::string>& special_token_strings() {
    static const std::vector<std::string> s = {"<pad>", "<bos>", "<eos>", "<unk>", "<nullcond>"};
    return s;
}

struct Vocabulary {
    std::vector<std::string> tokens;            // id -> token
    std::unordered_map<std::string, int> token_to_id;

    int size() const { return static_cast<int>(tokens.size()); }

    int id_of(const std::string& tok) const {
        auto it = token_to_id.find(tok);
        return it == token_to_id.end() ? TOK_UNK : it->second;
    }

    const std::string& token_of(int id) const { return tokens[static_cast<size_t>(id)]; }

    bool is_special(int id) const { return id < 5; }
};

inline std::string lowercase(std::string s) {
    for (char& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

inline std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream iss(line);
    std::string w;
    while (iss >> w) out.push_back(w);
    return out;
}

/// Builds a vocabulary from a sentence corpus: the five specials first, then
/// all lowercased tokens with frequency >= min_count ordered by frequency
/// descending, ties broken lexicographically.
inline Vocabulary build_vocab(const std::vector<std::string>& corpus, int min_count) {
    if (corpus.empty()) throw UsageError("empty corpus");
    std::unordered_map<std::string, long long> freq;
    for (const std::string& line : corpus)
        for (const std::string& w : split_words(lowercase(line))) ++freq[w];

    std::vector<std::pair<std::string, long long>> items(freq.begin(), freq.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    Vocabulary v;
    for (const std::string& s : special_token_strings()) {
        v.token_to_id[s] = v.size();
        v.tokens.push_back(s);
    }
    for (const auto& [tok, n] : items) {
        if (n < min_count) continue;
        if (v.token_to_id.count(tok)) continue;  // corpus text colliding with a special
        v.token_to_id[tok] = v.size();
        v.tokens.push_back(tok);
    }
    return v;
}

/// One token per line, line number = id.  Specials are lines 0-4.
inline void save_vocab(const Vocabulary& v, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write vocabulary file: " + path);
    for (const std::string& t : v.tokens) f << t << '\n';
}

inline Vocabulary load_vocab(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot read vocabulary file: " + path);
    Vocabulary v;
    std::string line;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        v.token_to_id[line] = v.size();
        v.tokens.push_back(line);
    }
    const auto& sp = special_token_strings();
    if (v.size() < 5) throw UsageError("vocabulary file too short: " + path);
    for (int i = 0; i < 5; ++i)
        if (v.tokens[static_cast<size_t>(i)] != sp[static_cast<size_t>(i)])
            throw UsageError("vocabulary file missing special tokens: " + path);
    if (v.token_to_id.size() != v.tokens.size())
        throw UsageError("vocabulary file contains duplicate tokens: " + path);
    return v;
}

}  // namespace ddtx

#endif  // DDTX_VOCAB_HPP
