#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace xchain {

/// Symbolic datum exchanged between parties and contracts.
///
/// Hashes are symbolic: HashOf("s") names the image of secret "s" under
/// an ideal hash. Anyone holding either Secret("s") or HashOf("s") can
/// produce HashOf("s"); nobody can recover Secret("s") from HashOf("s").
/// That one-way rule is the entire cryptography of the model.
class Value {
public:
    enum class Kind { Token, Secret, HashOf, Plain, Composite };

    static Value token(std::string name);
    static Value secret(std::string name);
    static Value hash_of(std::string secret_name);
    static Value plain(std::string literal);
    static Value plain_int(std::int64_t n);
    static Value composite(std::vector<Value> parts);

    Kind kind() const { return kind_; }
    const std::string& text() const { return text_; }
    const std::vector<Value>& parts() const { return parts_; }

    bool is_secret() const { return kind_ == Kind::Secret; }
    bool is_hash() const { return kind_ == Kind::HashOf; }

    /// Plain values created via plain_int parse back; throws otherwise.
    std::int64_t as_int() const;

    /// Stable textual form, e.g. "sec:s", "hash:s", "tok:a", "str:x",
    /// "[tok:a,hash:s]". Used for trace lines and canonical ordering.
    std::string render() const;

    bool operator==(const Value& other) const;
    bool operator<(const Value& other) const;

private:
    Kind kind_ = Kind::Plain;
    std::string text_;
    std::vector<Value> parts_;
};

/// True iff candidate is the preimage of hashkey: candidate = Secret(x)
/// and hashkey = HashOf(x). A hash is never its own preimage.
/// Throws DomainError if hashkey is not a HashOf value.
bool hash_match(const Value& candidate, const Value& hashkey);

/// What one party can produce in message payloads.
///
/// Tokens and plain literals are public names anyone can utter (asset
/// ownership is enforced by contracts, not by secrecy), so knowledge
/// tracks only the restricted material: secrets held and hashes learned.
/// The set grows monotonically; values are never forgotten.
class KnowledgeSet {
public:
    /// Inserts a value: secrets and hashes are recorded, composites are
    /// decomposed, tokens/plains are ignored (always producible).
    void learn(const Value& v);

    /// True if the party can construct v from what it knows.
    bool can_produce(const Value& v) const;

    bool knows_secret(const std::string& name) const;

    /// The first known secret matching hashkey, if any.
    /// Returns false if hashkey is not a hash or no preimage is known.
    bool find_preimage(const Value& hashkey, Value& out) const;

    /// Everything learned so far, in canonical order (for traces).
    std::vector<Value> learned() const;

    bool contains_ge(const KnowledgeSet& earlier) const;

    bool operator==(const KnowledgeSet& other) const {
        return secrets_ == other.secrets_ && hashes_ == other.hashes_;
    }

private:
    std::set<std::string> secrets_; // names of secrets held
    std::set<std::string> hashes_;  // names of secrets whose hash is known
};

} // namespace xchain
