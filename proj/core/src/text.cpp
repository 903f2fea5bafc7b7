#include "pcr/text.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "pcr/hash.hpp"

namespace pcr {

namespace {

bool is_ascii_alnum(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool is_ascii_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

char to_lower_ascii(unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

// Length of a valid UTF-8 sequence starting at text[i], or 0 if invalid.
size_t utf8_len(std::string_view text, size_t i) {
    unsigned char c = text[i];
    size_t n = 0;
    if ((c & 0x80) == 0x00) n = 1;
    else if ((c & 0xe0) == 0xc0) n = 2;
    else if ((c & 0xf0) == 0xe0) n = 3;
    else if ((c & 0xf8) == 0xf0) n = 4;
    else return 0;
    if (i + n > text.size()) return 0;
    for (size_t k = 1; k < n; ++k) {
        if ((static_cast<unsigned char>(text[i + k]) & 0xc0) != 0x80) return 0;
    }
    return n;
}

}  // namespace

TokenSeq tokenize(std::string_view text) {
    TokenSeq out;
    std::string run;
    auto flush = [&] {
        if (!run.empty()) {
            out.push_back(run);
            run.clear();
        }
    };
    size_t i = 0;
    while (i < text.size()) {
        unsigned char c = text[i];
        if (c < 0x80) {
            if (is_ascii_alnum(c)) {
                run.push_back(to_lower_ascii(c));
            } else {
                flush();
                if (!is_ascii_space(c)) out.emplace_back(1, static_cast<char>(c));
            }
            ++i;
        } else {
            // Non-ASCII codepoints are "special characters": one token each.
            flush();
            size_t n = utf8_len(text, i);
            if (n == 0) n = 1;  // invalid byte, keep it as its own token
            out.emplace_back(text.substr(i, n));
            i += n;
        }
    }
    flush();
    return out;
}

TokenSeq truncate(TokenSeq seq, size_t max_len) {
    if (seq.size() > max_len) seq.resize(max_len);
    return seq;
}

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> out;
    auto is_terminator = [](char c) { return c == '.' || c == '!' || c == '?'; };
    auto push_trimmed = [&](std::string_view seg) {
        size_t b = 0, e = seg.size();
        while (b < e && is_ascii_space(seg[b])) ++b;
        while (e > b && is_ascii_space(seg[e - 1])) --e;
        if (e > b) out.emplace_back(seg.substr(b, e - b));
    };
    size_t start = 0, i = 0;
    while (i < text.size()) {
        if (text[i] == '\n') {
            push_trimmed(text.substr(start, i - start));
            start = ++i;
        } else if (is_terminator(text[i])) {
            while (i < text.size() && is_terminator(text[i])) ++i;
            push_trimmed(text.substr(start, i - start));
            start = i;
        } else {
            ++i;
        }
    }
    push_trimmed(text.substr(start));
    return out;
}

std::string join_tokens(const TokenSeq& tokens) {
    std::string s;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) s.push_back(' ');
        s += tokens[i];
    }
    return s;
}

Vocabulary::Vocabulary(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    id_of_.reserve(tokens_.size());
    for (size_t i = 0; i < tokens_.size(); ++i) {
        if (tokens_[i].empty()) throw std::invalid_argument("vocabulary: empty token");
        auto [it, inserted] = id_of_.emplace(tokens_[i], static_cast<TokenId>(i + 2));
        if (!inserted) throw std::invalid_argument("vocabulary: duplicate token '" + tokens_[i] + "'");
    }
}

TokenId Vocabulary::lookup(std::string_view token) const {
    auto it = id_of_.find(std::string(token));
    return it == id_of_.end() ? kUnkId : it->second;
}

const std::string& Vocabulary::token_of(TokenId id) const {
    static const std::string kPad = "<pad>";
    static const std::string kUnk = "<unk>";
    if (id == kPadId) return kPad;
    if (id == kUnkId) return kUnk;
    size_t idx = static_cast<size_t>(id) - 2;
    if (id < 0 || idx >= tokens_.size()) throw std::out_of_range("vocabulary: id out of range");
    return tokens_[idx];
}

void Vocabulary::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("vocabulary: cannot write " + path.string());
    for (const auto& t : tokens_) out << t << '\n';
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("vocabulary: cannot read " + path.string());
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) throw std::runtime_error("vocabulary: empty line in " + path.string());
        tokens.push_back(line);
    }
    return Vocabulary(std::move(tokens));
}

uint64_t Vocabulary::fingerprint() const {
    Fnv1a h;
    for (const auto& t : tokens_) {
        h.update(t);
        h.update("\n");
    }
    return h.digest();
}

std::vector<TokenId> Vocabulary::ids_of(const TokenSeq& tokens) const {
    std::vector<TokenId> ids;
    ids.reserve(tokens.size());
    for (const auto& t : tokens) ids.push_back(lookup(t));
    return ids;
}

TokenSeq Vocabulary::tokens_of(const std::vector<TokenId>& ids) const {
    TokenSeq tokens;
    tokens.reserve(ids.size());
    for (TokenId id : ids) tokens.push_back(token_of(id));
    return tokens;
}

void VocabularyBuilder::add(const TokenSeq& seq) {
    for (const auto& t : seq) ++counts_[t];
}

void VocabularyBuilder::merge(const VocabularyBuilder& other) {
    for (const auto& [token, count] : other.counts_) counts_[token] += count;
}

Vocabulary VocabularyBuilder::finish(size_t cap) const {
    if (cap < 1) throw std::invalid_argument("vocabulary cap must be >= 1");
    std::vector<std::pair<std::string, uint64_t>> ranked(counts_.begin(), counts_.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > cap) ranked.resize(cap);
    std::vector<std::string> tokens;
    tokens.reserve(ranked.size());
    for (auto& [token, count] : ranked) tokens.push_back(std::move(token));
    return Vocabulary(std::move(tokens));
}

}  // namespace pcr
