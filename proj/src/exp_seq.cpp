#include "lnd/exp_seq.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace lnd {

ExpSeq::ExpSeq(std::vector<Term> terms) : terms_(std::move(terms)) {
    int prev = 0;
    for (const auto& [idx, mult] : terms_) {
        if (idx <= prev) throw std::invalid_argument("ExpSeq indices must be strictly increasing");
        if (mult <= 0) throw std::invalid_argument("ExpSeq multiplicities must be positive");
        prev = idx;
    }
}

ExpSeq ExpSeq::from_dense(const std::vector<int>& dense) {
    std::vector<Term> terms;
    for (size_t i = 0; i < dense.size(); ++i) {
        if (dense[i] < 0) throw std::invalid_argument("ExpSeq entries must be non-negative");
        if (dense[i] > 0) terms.emplace_back(static_cast<int>(i) + 1, dense[i]);
    }
    return ExpSeq(std::move(terms));
}

ExpSeq ExpSeq::single(int index, int multiplicity) {
    if (multiplicity == 0) return ExpSeq();
    return ExpSeq({{index, multiplicity}});
}

long ExpSeq::degree() const {
    long d = 0;
    for (const auto& [idx, mult] : terms_) d += static_cast<long>(idx) * mult;
    return d;
}

int ExpSeq::multiplicity(int index) const {
    for (const auto& [idx, mult] : terms_)
        if (idx == index) return mult;
    return 0;
}

std::vector<int> ExpSeq::dense() const {
    if (terms_.empty()) return {};
    std::vector<int> out(static_cast<size_t>(terms_.back().first), 0);
    for (const auto& [idx, mult] : terms_) out[static_cast<size_t>(idx) - 1] = mult;
    return out;
}

std::strong_ordering ExpSeq::operator<=>(const ExpSeq& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    return terms_ <=> o.terms_;
}

std::string ExpSeq::to_string() const {
    std::string out = "[";
    const auto d = dense();
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(d[i]);
    }
    return out + "]";
}

ExpSeq ExpSeq::parse(const std::string& text) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw std::invalid_argument("ExpSeq: expected '['");
    ++i;
    std::vector<int> dense;
    skip_ws();
    while (i < text.size() && text[i] != ']') {
        size_t used = 0;
        int v = std::stoi(text.substr(i), &used);
        if (v < 0) throw std::invalid_argument("ExpSeq: negative entry");
        dense.push_back(v);
        i += used;
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            skip_ws();
        }
    }
    if (i >= text.size()) throw std::invalid_argument("ExpSeq: expected ']'");
    ++i;
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("ExpSeq: trailing characters");
    return from_dense(dense);
}

ExpSeq add(const ExpSeq& a, const ExpSeq& b) {
    std::vector<ExpSeq::Term> out;
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first))
            out.push_back(*ia++);
        else if (ia == ea || ib->first < ia->first)
            out.push_back(*ib++);
        else {
            out.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return ExpSeq(std::move(out));
}

ExpSeq sub(const ExpSeq& a, const ExpSeq& b) {
    std::vector<ExpSeq::Term> out;
    auto ia = a.terms().begin(), ea = a.terms().end();
    for (const auto& [idx, mult] : b.terms()) {
        while (ia != ea && ia->first < idx) out.push_back(*ia++);
        if (ia == ea || ia->first != idx || ia->second < mult)
            throw std::invalid_argument("ExpSeq::sub: not componentwise dominated");
        if (ia->second > mult) out.emplace_back(idx, ia->second - mult);
        ++ia;
    }
    out.insert(out.end(), ia, ea);
    return ExpSeq(std::move(out));
}

namespace {

// Partitions of d with parts <= max_part, emitted as sparse multiplicity maps.
void partitions_rec(long d, int max_part, std::vector<ExpSeq::Term>& acc,
                    std::vector<ExpSeq>& out) {
    if (d == 0) {
        auto terms = acc;
        std::reverse(terms.begin(), terms.end());
        out.emplace_back(std::move(terms));
        return;
    }
    for (int part = std::min<long>(max_part, d); part >= 1; --part) {
        int count = 1;
        long rest = d - part;
        while (rest >= 0) {
            acc.emplace_back(part, count);
            partitions_rec(rest, part - 1, acc, out);
            acc.pop_back();
            ++count;
            rest -= part;
        }
    }
}

}  // namespace

std::vector<ExpSeq> enumerate_up_to(long bound) {
    std::vector<ExpSeq> out;
    for (long d = 0; d <= bound; ++d) {
        std::vector<ExpSeq> level;
        std::vector<ExpSeq::Term> acc;
        partitions_rec(d, static_cast<int>(d), acc, level);
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<std::pair<ExpSeq, ExpSeq>> splittings(const ExpSeq& alpha) {
    const auto& terms = alpha.terms();
    std::vector<int> choice(terms.size(), 0);
    std::vector<std::pair<ExpSeq, ExpSeq>> out;
    for (;;) {
        std::vector<ExpSeq::Term> beta, gamma;
        for (size_t k = 0; k < terms.size(); ++k) {
            if (choice[k] > 0) beta.emplace_back(terms[k].first, choice[k]);
            if (choice[k] < terms[k].second)
                gamma.emplace_back(terms[k].first, terms[k].second - choice[k]);
        }
        out.emplace_back(ExpSeq(std::move(beta)), ExpSeq(std::move(gamma)));
        size_t k = 0;
        while (k < terms.size() && choice[k] == terms[k].second) choice[k++] = 0;
        if (k == terms.size()) break;
        ++choice[k];
    }
    return out;
}

std::vector<std::vector<ExpSeq>> enumerate_tuples(int len, long bound) {
    std::vector<std::vector<ExpSeq>> out;
    if (len == 0) {
        out.push_back({});
        return out;
    }
    const auto seqs = enumerate_up_to(bound);
    std::vector<ExpSeq> acc;
    // Depth-first over components, then stable-sorted by total degree so the
    // order is degree-major as documented.
    std::function<void(int, long)> rec = [&](int pos, long left) {
        if (pos == len) {
            out.push_back(acc);
            return;
        }
        for (const auto& s : seqs) {
            if (s.degree() > left) break;
            acc.push_back(s);
            rec(pos + 1, left - s.degree());
            acc.pop_back();
        }
    };
    rec(0, bound);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        long da = 0, db = 0;
        for (const auto& s : a) da += s.degree();
        for (const auto& s : b) db += s.degree();
        return da < db;
    });
    return out;
}

}  // namespace lnd
