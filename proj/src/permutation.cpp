#include "permstat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace permstat {

namespace {

void check_word(const std::vector<int>& w) {
    if (w.empty()) throw validation_error("a permutation needs at least one entry");
    const int n = static_cast<int>(w.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : w) {
        if (v < 1 || v > n)
            throw validation_error("value " + std::to_string(v) +
                                   " is outside 1.." + std::to_string(n));
        if (seen[static_cast<size_t>(v)])
            throw validation_error("value " + std::to_string(v) + " appears twice");
        seen[static_cast<size_t>(v)] = 1;
    }
}

} // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    check_word(word_);
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
    if (text.empty()) throw validation_error("empty permutation text");
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t next = text.find(',', pos);
            std::string tok = text.substr(pos, next == std::string::npos
                                                   ? std::string::npos
                                                   : next - pos);
            if (tok.empty())
                throw validation_error("empty entry in '" + text + "'");
            for (char c : tok)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw validation_error("bad entry '" + tok + "'");
            if (tok.size() > 2) throw validation_error("bad entry '" + tok + "'");
            w.push_back(std::stoi(tok));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    } else {
        if (text.size() >= 10)
            throw validation_error(
                "digit form is only valid for n <= 9; use comma-separated values");
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                throw validation_error(std::string("bad digit '") + c + "'");
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= size(); ++i)
        inv[static_cast<size_t>((*this)(i)) - 1] = i;
    Permutation p;
    p.word_ = std::move(inv);
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw validation_error("size mismatch in composition");
    std::vector<int> w(a.word_.size());
    for (int i = 1; i <= a.size(); ++i)
        w[static_cast<size_t>(i - 1)] = a(b(i));
    Permutation p;
    p.word_ = std::move(w);
    return p;
}

std::string Permutation::str() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
        if (i) s += ',';
        s += std::to_string(word_[static_cast<size_t>(i)]);
    }
    return s;
}

std::string Permutation::compact() const {
    if (size() > 9)
        throw capacity_error("digit form is only valid for n <= 9");
    std::string s;
    for (int v : word_) s += static_cast<char>('0' + v);
    return s;
}

std::string Permutation::display() const {
    return size() <= 9 ? compact() : str();
}

std::uint64_t Permutation::encode() const {
    if (size() > 15)
        throw capacity_error("encode supports n <= 15");
    std::uint64_t key = 0;
    for (int v : word_) key = (key << 4) | static_cast<std::uint64_t>(v);
    return key;
}

Permutation Permutation::decode(std::uint64_t packed, int n) {
    if (n < 1 || n > 15) throw capacity_error("decode supports 1 <= n <= 15");
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        w[static_cast<size_t>(i)] = static_cast<int>(packed & 0xF);
        packed >>= 4;
    }
    return Permutation(std::move(w));
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw capacity_error("factorial supports 0 <= n <= 20");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

void enumerate(int n, const std::function<void(const Permutation&)>& fn) {
    enumerate_range(n, 0, factorial(n), fn);
}

Permutation unrank(int n, std::uint64_t rank) {
    if (n > kEnumerationCap) throw capacity_error("enumeration supports n <= 12");
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    for (int i = n; i >= 1; --i) {
        std::uint64_t f = factorial(i - 1);
        size_t idx = static_cast<size_t>(rank / f);
        if (idx >= pool.size()) throw validation_error("rank out of range");
        rank %= f;
        w.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(w));
}

void enumerate_range(int n, std::uint64_t begin, std::uint64_t end,
                     const std::function<void(const Permutation&)>& fn) {
    if (n > kEnumerationCap) throw capacity_error("enumeration supports n <= 12");
    if (begin >= end) return;
    Permutation p = unrank(n, begin);
    std::vector<int> w = p.word();
    for (std::uint64_t r = begin; r < end; ++r) {
        fn(Permutation(w));
        if (!std::next_permutation(w.begin(), w.end())) break;
    }
}

} // namespace permstat
