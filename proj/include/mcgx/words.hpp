// Free-group words over an explicit generator alphabet.
//
// Words are immutable values and are freely reduced at construction, so
// structural equality coincides with equality of free-group representatives.
// A Word is only valid against the alphabet that created its symbols; every
// binary operation checks this and throws AlphabetMismatch otherwise.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <initializer_list>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace mcgx {

using json = nlohmann::ordered_json;

struct AlphabetMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Alphabet;

// A generator symbol. Identity is the name; symbols from different alphabets
// with the same name compare equal, but Word operations refuse to mix them.
class GeneratorSymbol {
public:
    GeneratorSymbol() = default;

    const std::string& name() const { return *name_; }
    int index() const { return index_; }

    friend bool operator==(const GeneratorSymbol& a, const GeneratorSymbol& b) {
        return a.name() == b.name();
    }
    friend bool operator!=(const GeneratorSymbol& a, const GeneratorSymbol& b) { return !(a == b); }

private:
    friend class Alphabet;
    GeneratorSymbol(const std::string* name, int index) : name_(name), index_(index) {}
    const std::string* name_ = nullptr;
    int index_ = -1;
};

class Alphabet {
    struct Data {
        std::vector<std::string> names;
        std::map<std::string, int> index;
    };

public:
    Alphabet() : d_(std::make_shared<Data>()) {}

    explicit Alphabet(std::vector<std::string> names) {
        auto d = std::make_shared<Data>();
        d->names = std::move(names);
        for (int i = 0; i < static_cast<int>(d->names.size()); ++i) {
            if (!d->index.emplace(d->names[i], i).second)
                throw std::invalid_argument("duplicate generator name: " + d->names[i]);
        }
        d_ = std::move(d);
    }

    std::size_t size() const { return d_->names.size(); }
    const std::vector<std::string>& names() const { return d_->names; }
    const std::string& name(int idx) const { return d_->names.at(static_cast<std::size_t>(idx)); }

    bool contains(const std::string& name) const { return d_->index.count(name) != 0; }

    GeneratorSymbol symbol(const std::string& name) const {
        auto it = d_->index.find(name);
        if (it == d_->index.end())
            throw std::invalid_argument("unknown generator name: " + name);
        return GeneratorSymbol(&d_->names[static_cast<std::size_t>(it->second)], it->second);
    }

    GeneratorSymbol symbol(int idx) const {
        return GeneratorSymbol(&d_->names.at(static_cast<std::size_t>(idx)), idx);
    }

    // Alphabets are identity objects: equal only if they are the same object.
    bool same(const Alphabet& other) const { return d_ == other.d_; }

private:
    std::shared_ptr<const Data> d_;
};

// One syllable: a generator with a nonzero exponent.
struct Letter {
    int sym;        // index into the alphabet
    mpz_class exp;  // nonzero

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.sym == b.sym && a.exp == b.exp;
    }
};

class Word {
public:
    static Word identity(const Alphabet& a) { return Word(a); }

    explicit Word(const Alphabet& a) : alpha_(a) {}

    Word(const Alphabet& a, const std::vector<std::pair<GeneratorSymbol, mpz_class>>& syllables)
        : alpha_(a) {
        for (const auto& [sym, exp] : syllables) push(sym.index(), exp);
    }

    // Convenience: build from (name, exponent) pairs.
    Word(const Alphabet& a, std::initializer_list<std::pair<const char*, long>> syllables)
        : alpha_(a) {
        for (const auto& [name, exp] : syllables) push(a.symbol(name).index(), mpz_class(exp));
    }

    const Alphabet& alphabet() const { return alpha_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    // Sum of |exponent| over all syllables.
    mpz_class length() const {
        mpz_class n = 0;
        for (const auto& l : letters_) n += abs(l.exp);
        return n;
    }

    mpz_class exponent_sum(const GeneratorSymbol& s) const {
        mpz_class n = 0;
        for (const auto& l : letters_)
            if (l.sym == s.index()) n += l.exp;
        return n;
    }

    // Structural equality; symbols compare by name, so words over distinct
    // alphabet objects with matching letter names are equal.
    friend bool operator==(const Word& a, const Word& b) {
        if (a.alpha_.same(b.alpha_)) return a.letters_ == b.letters_;
        if (a.letters_.size() != b.letters_.size()) return false;
        for (std::size_t i = 0; i < a.letters_.size(); ++i) {
            if (a.letters_[i].exp != b.letters_[i].exp) return false;
            if (a.alpha_.name(a.letters_[i].sym) != b.alpha_.name(b.letters_[i].sym)) return false;
        }
        return true;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

    friend Word concat(const Word& u, const Word& v) {
        if (!u.alpha_.same(v.alpha_))
            throw AlphabetMismatch("concat: words over different alphabets");
        Word r = u;
        for (const auto& l : v.letters_) r.push(l.sym, l.exp);
        return r;
    }

    friend Word invert(const Word& u) {
        Word r(u.alpha_);
        r.letters_.reserve(u.letters_.size());
        for (auto it = u.letters_.rbegin(); it != u.letters_.rend(); ++it)
            r.letters_.push_back(Letter{it->sym, -it->exp});
        return r;  // reversal of a reduced word is reduced
    }

    // w^-1 u w
    friend Word conjugate(const Word& u, const Word& w) {
        return concat(concat(invert(w), u), w);
    }

    friend Word pow(const Word& u, long n) {
        if (n < 0) return pow(invert(u), -n);
        Word r(u.alpha_);
        for (long i = 0; i < n; ++i) r = concat(r, u);
        return r;
    }

    Word operator*(const Word& v) const { return concat(*this, v); }

    // Shortest representative of the cyclic-conjugacy class reachable by
    // cancelling first-against-last letters.
    friend Word cyclic_reduce(const Word& u) {
        Word r = u;
        while (r.letters_.size() >= 2 && r.letters_.front().sym == r.letters_.back().sym) {
            mpz_class merged = r.letters_.front().exp + r.letters_.back().exp;
            r.letters_.pop_back();
            if (merged == 0) {
                r.letters_.erase(r.letters_.begin());
            } else {
                r.letters_.front().exp = merged;
                break;
            }
        }
        return r;
    }

    // Substitute a symbol by the empty word, rebuilding over a target alphabet
    // (which must contain every remaining symbol by name).
    Word erase_symbol(const GeneratorSymbol& s, const Alphabet& target) const {
        Word r(target);
        for (const auto& l : letters_) {
            if (l.sym == s.index()) continue;
            r.push(target.symbol(alpha_.name(l.sym)).index(), l.exp);
        }
        return r;
    }

    std::string str() const {
        std::string out;
        for (const auto& l : letters_) {
            if (!out.empty()) out += ' ';
            out += alpha_.name(l.sym);
            if (l.exp != 1) out += '^' + l.exp.get_str();
        }
        return out;
    }

    // Reduced form only: JSON array of [name, exponent] pairs.
    json to_json() const {
        json arr = json::array();
        for (const auto& l : letters_) {
            if (!l.exp.fits_slong_p())
                throw std::overflow_error("word exponent does not fit in a JSON integer");
            arr.push_back(json::array({alpha_.name(l.sym), l.exp.get_si()}));
        }
        return arr;
    }

    static Word from_json(const Alphabet& a, const json& arr) {
        Word r(a);
        for (const auto& pair : arr)
            r.push(a.symbol(pair.at(0).get<std::string>()).index(), mpz_class(pair.at(1).get<long>()));
        return r;
    }

private:
    void push(int sym, const mpz_class& exp) {
        if (exp == 0) return;
        if (!letters_.empty() && letters_.back().sym == sym) {
            letters_.back().exp += exp;
            if (letters_.back().exp == 0) letters_.pop_back();
        } else {
            letters_.push_back(Letter{sym, exp});
        }
    }

    Alphabet alpha_;
    std::vector<Letter> letters_;
};

inline Word gen(const Alphabet& a, const std::string& name, long exp = 1) {
    std::vector<std::pair<GeneratorSymbol, mpz_class>> one{{a.symbol(name), mpz_class(exp)}};
    return Word(a, one);
}

}  // namespace mcgx
