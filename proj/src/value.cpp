#include "xchain/value.hpp"

#include "xchain/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace xchain {

Value Value::token(std::string name) {
    Value v;
    v.kind_ = Kind::Token;
    v.text_ = std::move(name);
    return v;
}

Value Value::secret(std::string name) {
    Value v;
    v.kind_ = Kind::Secret;
    v.text_ = std::move(name);
    return v;
}

Value Value::hash_of(std::string secret_name) {
    Value v;
    v.kind_ = Kind::HashOf;
    v.text_ = std::move(secret_name);
    return v;
}

Value Value::plain(std::string literal) {
    Value v;
    v.kind_ = Kind::Plain;
    v.text_ = std::move(literal);
    return v;
}

Value Value::plain_int(std::int64_t n) {
    return plain(std::to_string(n));
}

Value Value::composite(std::vector<Value> parts) {
    Value v;
    v.kind_ = Kind::Composite;
    v.parts_ = std::move(parts);
    return v;
}

std::int64_t Value::as_int() const {
    if (kind_ != Kind::Plain) {
        throw DomainError("value is not a plain integer: " + render());
    }
    return std::stoll(text_);
}

std::string Value::render() const {
    switch (kind_) {
    case Kind::Token:
        return "tok:" + text_;
    case Kind::Secret:
        return "sec:" + text_;
    case Kind::HashOf:
        return "hash:" + text_;
    case Kind::Plain:
        return "str:" + text_;
    case Kind::Composite: {
        std::string out = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i > 0) {
                out += ",";
            }
            out += parts_[i].render();
        }
        out += "]";
        return out;
    }
    }
    return "?";
}

bool Value::operator==(const Value& other) const {
    return kind_ == other.kind_ && text_ == other.text_ && parts_ == other.parts_;
}

bool Value::operator<(const Value& other) const {
    if (kind_ != other.kind_) {
        return kind_ < other.kind_;
    }
    if (text_ != other.text_) {
        return text_ < other.text_;
    }
    return parts_ < other.parts_;
}

bool hash_match(const Value& candidate, const Value& hashkey) {
    if (!hashkey.is_hash()) {
        throw DomainError("hash_match: hashkey is not a hash value: " + hashkey.render());
    }
    return candidate.is_secret() && candidate.text() == hashkey.text();
}

void KnowledgeSet::learn(const Value& v) {
    switch (v.kind()) {
    case Value::Kind::Secret:
        secrets_.insert(v.text());
        break;
    case Value::Kind::HashOf:
        hashes_.insert(v.text());
        break;
    case Value::Kind::Composite:
        for (const Value& part : v.parts()) {
            learn(part);
        }
        break;
    case Value::Kind::Token:
    case Value::Kind::Plain:
        break; // public names, nothing to record
    }
}

bool KnowledgeSet::can_produce(const Value& v) const {
    switch (v.kind()) {
    case Value::Kind::Secret:
        return secrets_.count(v.text()) > 0;
    case Value::Kind::HashOf:
        // Deriving a hash needs the preimage or the hash itself; hashes
        // never yield their preimage.
        return secrets_.count(v.text()) > 0 || hashes_.count(v.text()) > 0;
    case Value::Kind::Composite:
        return std::all_of(v.parts().begin(), v.parts().end(),
                           [&](const Value& p) { return can_produce(p); });
    case Value::Kind::Token:
    case Value::Kind::Plain:
        return true;
    }
    return false;
}

bool KnowledgeSet::knows_secret(const std::string& name) const {
    return secrets_.count(name) > 0;
}

bool KnowledgeSet::find_preimage(const Value& hashkey, Value& out) const {
    if (!hashkey.is_hash()) {
        return false;
    }
    if (secrets_.count(hashkey.text()) > 0) {
        out = Value::secret(hashkey.text());
        return true;
    }
    return false;
}

std::vector<Value> KnowledgeSet::learned() const {
    std::vector<Value> out;
    out.reserve(secrets_.size() + hashes_.size());
    for (const std::string& s : secrets_) {
        out.push_back(Value::secret(s));
    }
    for (const std::string& h : hashes_) {
        out.push_back(Value::hash_of(h));
    }
    return out;
}

bool KnowledgeSet::contains_ge(const KnowledgeSet& earlier) const {
    return std::includes(secrets_.begin(), secrets_.end(),
                         earlier.secrets_.begin(), earlier.secrets_.end()) &&
           std::includes(hashes_.begin(), hashes_.end(),
                         earlier.hashes_.begin(), earlier.hashes_.end());
}

} // namespace xchain
