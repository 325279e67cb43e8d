#include "schur/grouplab.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

#include "schur/psirank.hpp"
#include "schur/trigraph.hpp"

namespace schur {

ClassTwoGroup make_class_two_group(AltMap map) {
    if (map.p == 2) throw InvalidParams("exponent-p class-2 groups need p odd");
    if (map.m < 1) throw InvalidParams("class-2 groups are nonabelian: dim V >= 1");
    if (map.n < 2) throw InvalidParams("need at least two generators");
    validate(map);
    return {std::move(map)};
}

GroupInvariants invariants(const ClassTwoGroup& g) {
    long long d = g.map.n;
    long long k = g.map.m;
    long long rad = static_cast<long long>(radical(g.map).size());
    return {g.map.p, d + k, d, d - rad, k, k};
}

long long schur_exponent_exact(const ClassTwoGroup& g) {
    long long d = g.map.n, k = g.map.m;
    return d * k + binomial(d, 2) - static_cast<long long>(dim_im_psi(g.map)) - k;
}

long long h2_exponent(const ClassTwoGroup& g) {
    return g.map.n + schur_exponent_exact(g);
}

ClassTwoGroup construct_sharp_group(Residue p, int d, int delta, int k) {
    if (!is_prime(p) || p == 2) throw InfeasibleParameters("p must be an odd prime");
    if (delta < 2) throw InfeasibleParameters("need delta >= 2");
    if (d < delta) throw InfeasibleParameters("need delta <= d");
    if (k < delta - 1 || k > binomial(delta, 2))
        throw InfeasibleParameters("need delta - 1 <= k <= C(delta,2)");

    RTDecomposition rt = rt_decompose(binomial(delta, 2) - k);
    int r = int(rt.r), t = int(rt.t);
    std::set<IndexPair> killed;
    for (int i = delta - r + 1; i <= delta; ++i)
        for (int j = i + 1; j <= delta; ++j) killed.insert({i, j});
    for (int j = delta - t + 1; j <= delta; ++j)
        killed.insert({std::min(delta - r, j), std::max(delta - r, j)});

    std::vector<IndexPair> kept;
    for (int i = 1; i <= delta; ++i)
        for (int j = i + 1; j <= delta; ++j)
            if (!killed.count({i, j})) kept.push_back({i, j});
    // assign basis vectors in ascending pair order (max first, then min)
    std::sort(kept.begin(), kept.end(), [](IndexPair a, IndexPair b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    if (int(kept.size()) != k) throw std::logic_error("kept pair count mismatch in construction");

    AltMap map(p, d, k); // d - delta trailing generators stay commutator-free
    for (int idx = 0; idx < k; ++idx) {
        FpVector v(k, 0);
        v[idx] = 1;
        map.set(kept[idx].first, kept[idx].second, std::move(v));
    }
    return make_class_two_group(std::move(map));
}

std::vector<std::pair<Residue, long long>> multiplier_of_coprime_product(const std::vector<ClassTwoGroup>& parts) {
    std::set<Residue> seen;
    std::vector<std::pair<Residue, long long>> out;
    for (const auto& g : parts) {
        if (!seen.insert(g.map.p).second)
            throw DuplicatePrime("prime " + std::to_string(g.map.p) + " appears twice");
        out.emplace_back(g.map.p, schur_exponent_exact(g));
    }
    return out;
}

Capability capability_check(const ClassTwoGroup& g) {
    QuotientResult q = quotient_by_radical(g.map);
    std::vector<FpVector> nontrivial;
    for (std::size_t a = 0; a < q.kept.size(); ++a)
        for (std::size_t b = a + 1; b < q.kept.size(); ++b) {
            FpVector v = g.map.value(q.kept[a], q.kept[b]);
            if (std::any_of(v.begin(), v.end(), [](Residue x) { return x != 0; }))
                nontrivial.push_back(std::move(v));
        }
    if (nontrivial.size() != std::size_t(g.map.m)) return Capability::Unknown;
    std::set<FpVector> distinct(nontrivial.begin(), nontrivial.end());
    if (distinct.size() != nontrivial.size()) return Capability::Unknown;
    SpanAccumulator acc(g.map.p, g.map.m);
    for (const auto& v : nontrivial)
        if (!acc.insert(v)) return Capability::Unknown;
    return Capability::Capable;
}

namespace {

std::string word_of(const FpVector& v) {
    std::string w;
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t] == 0) continue;
        if (!w.empty()) w += "*";
        w += "q" + std::to_string(t + 1);
        if (v[t] != 1) w += "^" + std::to_string(v[t]);
    }
    return w.empty() ? "1" : w;
}

} // namespace

std::string to_presentation(const ClassTwoGroup& g) {
    std::ostringstream out;
    out << "< ";
    for (int i = 1; i <= g.map.n; ++i) out << "g" << i << ", ";
    for (int j = 1; j <= g.map.m; ++j) out << "q" << j << (j == g.map.m ? " |" : ", ");
    out << "\n  g1^" << g.map.p << " = ... = g" << g.map.n << "^" << g.map.p
        << " = q1^" << g.map.p << " = ... = q" << g.map.m << "^" << g.map.p << " = 1,\n"
        << "  [qa,qb] = [ga,qb] = 1 for all a, b,\n";
    for (const auto& [pair, v] : g.map.table)
        out << "  [g" << pair.first << ",g" << pair.second << "] = " << word_of(v) << ",\n";
    out << "  [ga,gb] = 1 otherwise >\n";
    return out.str();
}

ClassTwoGroup parse_presentation(const std::string& text) {
    // generator list up to '|'
    std::size_t bar = text.find('|');
    if (bar == std::string::npos) throw MalformedDocument("presentation lacks a '|'");
    int n = 0, m = 0;
    {
        std::istringstream gen(text.substr(0, bar));
        std::string tok;
        while (std::getline(gen, tok, ',')) {
            std::size_t g = tok.find_first_of("gq<");
            if (g == std::string::npos) continue;
            if (tok[g] == '<') g = tok.find_first_of("gq", g + 1);
            if (g == std::string::npos || g + 1 >= tok.size()) continue;
            int idx = std::atoi(tok.c_str() + g + 1);
            if (tok[g] == 'g') n = std::max(n, idx);
            else m = std::max(m, idx);
        }
    }
    std::size_t caret = text.find('^', bar);
    if (caret == std::string::npos) throw MalformedDocument("presentation lacks power relations");
    long long p = std::atoll(text.c_str() + caret + 1);
    if (p < 3 || !is_prime(std::uint64_t(p))) throw NonPrimeModulus("exponent must be an odd prime");

    AltMap map(Residue(p), n, m);
    std::istringstream lines(text.substr(bar));
    std::string line;
    while (std::getline(lines, line)) {
        std::size_t at = line.find("[g");
        if (at == std::string::npos) continue;
        int i = 0, j = 0;
        char c2 = 0;
        if (std::sscanf(line.c_str() + at, "[g%d,%c%d]", &i, &c2, &j) != 3 || c2 != 'g')
            continue; // centrality shorthand lines
        std::size_t eq = line.find('=', at);
        if (eq == std::string::npos) throw MalformedDocument("commutator relation lacks '='");
        std::string rhs = line.substr(eq + 1);
        // strip spaces and the trailing ,/>
        std::string w;
        for (char ch : rhs) {
            if (ch == ',' || ch == '>') break;
            if (!std::isspace(static_cast<unsigned char>(ch))) w += ch;
        }
        FpVector v(m, 0);
        if (w != "1") {
            std::istringstream factors(w);
            std::string factor;
            while (std::getline(factors, factor, '*')) {
                if (factor.empty() || factor[0] != 'q') throw MalformedDocument("bad factor: " + factor);
                int qi = std::atoi(factor.c_str() + 1);
                if (qi < 1 || qi > m) throw IndexOutOfRange("q index out of range");
                std::size_t pw = factor.find('^');
                long long e = pw == std::string::npos ? 1 : std::atoll(factor.c_str() + pw + 1);
                v[qi - 1] = fp_add(v[qi - 1], fp_reduce(e, Residue(p)), Residue(p));
            }
        }
        map.set(i, j, std::move(v));
    }
    return make_class_two_group(std::move(map));
}

} // namespace schur
