#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pcr {

using TokenSeq = std::vector<std::string>;
using TokenId = int32_t;

inline constexpr size_t kMaxCommentTokens = 100;

// Lowercases and splits text into tokens: every maximal run of ASCII
// alphanumerics is one token, every other non-whitespace codepoint is a
// token of its own. Multi-byte UTF-8 codepoints stay intact; invalid
// bytes fall back to single-byte tokens.
TokenSeq tokenize(std::string_view text);

// First min(seq.size(), max_len) tokens.
TokenSeq truncate(TokenSeq seq, size_t max_len);

// Splits after maximal runs of '.', '!', '?' and at newlines. Segments
// are whitespace-trimmed; empty segments are dropped.
std::vector<std::string> split_sentences(std::string_view text);

std::string join_tokens(const TokenSeq& tokens);

// Frequency-capped token dictionary. Ids 0 and 1 are reserved for PAD
// and UNK and are implicit in the on-disk format (one token per line,
// rank order, id = line number + 2).
class Vocabulary {
public:
    static constexpr TokenId kPadId = 0;
    static constexpr TokenId kUnkId = 1;

    Vocabulary() = default;

    // tokens must already be in rank order, without PAD/UNK.
    explicit Vocabulary(std::vector<std::string> tokens);

    TokenId lookup(std::string_view token) const;
    const std::string& token_of(TokenId id) const;

    // Total id count, reserved ids included.
    size_t size() const { return tokens_.size() + 2; }

    void save(const std::filesystem::path& path) const;
    static Vocabulary load(const std::filesystem::path& path);

    // Stable content hash over the ranked token list.
    uint64_t fingerprint() const;

    std::vector<TokenId> ids_of(const TokenSeq& tokens) const;
    TokenSeq tokens_of(const std::vector<TokenId>& ids) const;

private:
    std::vector<std::string> tokens_;                       // id - 2 -> token
    std::unordered_map<std::string, TokenId> id_of_;
};

// Streaming frequency counter. Shards may be counted on separate
// instances and merged; the final ranking is order-insensitive.
class VocabularyBuilder {
public:
    void add(const TokenSeq& seq);
    void merge(const VocabularyBuilder& other);

    // The cap most frequent tokens; ties broken lexicographically
    // ascending. cap must be >= 1.
    Vocabulary finish(size_t cap) const;

private:
    std::unordered_map<std::string, uint64_t> counts_;
};

}  // namespace pcr
