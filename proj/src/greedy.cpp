#include "schur/greedy.hpp"

#include <algorithm>
#include <stdexcept>

namespace schur {

std::vector<int> natural_order(int n) {
    std::vector<int> ord(n);
    for (int i = 0; i < n; ++i) ord[i] = i + 1;
    return ord;
}

namespace {

std::vector<int> positions(const std::vector<int>& order) {
    std::vector<int> pos(order.size() + 1, -1);
    for (std::size_t k = 0; k < order.size(); ++k) {
        int idx = order[k];
        if (idx < 1 || idx > int(order.size()) || pos[idx] != -1)
            throw InvalidParams("order must be a permutation of 1..n");
        pos[idx] = int(k);
    }
    return pos;
}

// pair normalized to (lower position, higher position)
IndexPair by_position(IndexPair pr, const std::vector<int>& pos) {
    return pos[pr.first] <= pos[pr.second] ? pr : IndexPair{pr.second, pr.first};
}

} // namespace

std::strong_ordering pair_cmp(IndexPair a, IndexPair b, const std::vector<int>& order) {
    std::vector<int> pos = positions(order);
    a = by_position(a, pos);
    b = by_position(b, pos);
    if (auto c = pos[a.second] <=> pos[b.second]; c != 0) return c;
    return pos[a.first] <=> pos[b.first];
}

std::strong_ordering triple_cmp(const IndexTriple& a, const IndexTriple& b, const std::vector<int>& order) {
    std::vector<int> pos = positions(order);
    auto split = [&](const IndexTriple& t) {
        IndexTriple s = t;
        std::sort(s.begin(), s.end(), [&](int x, int y) { return pos[x] < pos[y]; });
        return s;
    };
    IndexTriple sa = split(a), sb = split(b);
    if (auto c = pos[sa[2]] <=> pos[sb[2]]; c != 0) return c;
    if (auto c = pos[sa[1]] <=> pos[sb[1]]; c != 0) return c;
    return pos[sa[0]] <=> pos[sb[0]];
}

bool PairBasis::contains(IndexPair pr) const {
    if (pr.first > pr.second) std::swap(pr.first, pr.second);
    for (IndexPair q : pairs) {
        if (q.first > q.second) std::swap(q.first, q.second);
        if (q == pr) return true;
    }
    return false;
}

PairBasis construct_pair_basis(const AltMap& a, const std::vector<int>& order) {
    validate(a);
    if (a.m < 1) throw ImageDoesNotSpan("greedy scan needs dim V >= 1");
    if (int(order.size()) != a.n) throw InvalidParams("order must be a permutation of 1..n");
    std::vector<int> pos = positions(order);

    std::vector<IndexPair> candidates;
    candidates.reserve(std::size_t(a.n) * (a.n - 1) / 2);
    for (int i = 1; i <= a.n; ++i)
        for (int j = i + 1; j <= a.n; ++j) candidates.push_back(by_position({i, j}, pos));
    std::sort(candidates.begin(), candidates.end(), [&](IndexPair x, IndexPair y) {
        if (pos[x.second] != pos[y.second]) return pos[x.second] < pos[y.second];
        return pos[x.first] < pos[y.first];
    });

    PairBasis pb;
    pb.order = order;
    SpanAccumulator span(a.p, a.m);
    for (IndexPair pr : candidates) {
        int before = int(span.rank());
        FpVector v = a.value(pr.first, pr.second);
        bool accepted = span.insert(v);
        pb.trace.push_back({pr, accepted, before});
        if (accepted) {
            pb.pairs.push_back(pr);
            pb.basis.push_back(std::move(v));
            if (int(pb.pairs.size()) == a.m) break;
        }
    }
    if (int(pb.pairs.size()) != a.m)
        throw ImageDoesNotSpan("pair values do not span V"); // validate() makes this unreachable
    return pb;
}

PairBasis construct_pair_basis(const AltMap& a) { return construct_pair_basis(a, natural_order(a.n)); }

std::pair<bool, std::optional<int>> is_tree_of_height_one(const std::vector<IndexPair>& pairs) {
    if (pairs.empty()) return {false, std::nullopt};
    if (pairs.size() == 1) return {true, std::min(pairs[0].first, pairs[0].second)};
    for (int apex : {std::min(pairs[0].first, pairs[0].second), std::max(pairs[0].first, pairs[0].second)}) {
        bool all = std::all_of(pairs.begin(), pairs.end(),
                               [&](IndexPair q) { return q.first == apex || q.second == apex; });
        if (all) return {true, apex};
    }
    return {false, std::nullopt};
}

namespace {

bool is_star_1(const PairBasis& pb, int m) {
    if (int(pb.pairs.size()) != m) return false;
    for (int j = 2; j <= m + 1; ++j) {
        IndexPair want{1, j};
        if (pb.pairs[j - 2] != want) return false;
    }
    return true;
}

std::vector<int> fill_rest(std::vector<int> head, int n) {
    std::vector<bool> used(n + 1, false);
    for (int i : head) used[i] = true;
    for (int i = 1; i <= n; ++i)
        if (!used[i]) head.push_back(i);
    return head;
}

bool independent(const std::vector<FpVector>& vs, Residue p) {
    if (vs.empty()) return true;
    SpanAccumulator acc(p, vs[0].size());
    for (const auto& v : vs)
        if (!acc.insert(v)) return false;
    return true;
}

} // namespace

NormalizationOutcome normalize_pair_basis(const AltMap& a) {
    if (a.m <= 2) throw HypothesisViolated("requires dim V > 2");
    if (a.n <= a.m + 1) throw HypothesisViolated("requires dim U > dim V + 1");
    validate(a);

    const int n = a.n, m = a.m;
    AltMap cur = a;
    BasisChange total = BasisChange::identity(a.p, n);

    auto finish_nontree = [&](int step, PairBasis pb) {
        auto [tree, apex] = is_tree_of_height_one(pb.pairs);
        if (tree) throw std::logic_error("normalize_pair_basis: stage " + std::to_string(step) +
                                         " produced a star against the proof");
        return NormalizationOutcome{NormalizationOutcome::Kind::NonTree, total, step, std::move(pb)};
    };

    PairBasis pb = construct_pair_basis(cur);
    if (!is_tree_of_height_one(pb.pairs).first) return finish_nontree(0, std::move(pb));

    // Step 1: relabel so the apex sits first, partners follow in acceptance order.
    int apex = *is_tree_of_height_one(pb.pairs).second;
    std::vector<int> image{apex};
    for (IndexPair pr : pb.pairs) image.push_back(pr.first == apex ? pr.second : pr.first);
    image = fill_rest(std::move(image), n);
    BasisChange p1 = BasisChange::permutation(a.p, image);
    cur = change_basis(cur, p1);
    total = total.composed(p1);
    pb = construct_pair_basis(cur);
    if (!is_tree_of_height_one(pb.pairs).first) return finish_nontree(1, std::move(pb));
    if (!is_star_1(pb, m)) throw std::logic_error("normalize_pair_basis: relabeled star is not {1,2}..{1,m+1}");

    // Step 2: absorb Ker(u -> A(u_1, u)) into the tail coordinates.
    FpMatrix lmat(a.p, m, n);
    for (int j = 2; j <= n; ++j) {
        FpVector v = cur.value(1, j);
        for (int t = 0; t < m; ++t) lmat.at(t, j - 1) = v[t];
    }
    std::vector<FpVector> ker = kernel_basis(lmat); // dim n - m, contains e_1
    FpMatrix cols(a.p, n, n);
    SpanAccumulator grown(a.p, n);
    for (int i = 0; i < m + 1; ++i) {
        FpVector e(n, 0);
        e[i] = 1;
        grown.insert(e);
        cols.at(i, i) = 1;
    }
    int next = m + 1;
    for (const auto& kv : ker) {
        if (next == n) break;
        if (grown.insert(kv)) {
            for (int r = 0; r < n; ++r) cols.at(r, next) = kv[r];
            ++next;
        }
    }
    if (next != n) throw std::logic_error("normalize_pair_basis: kernel does not complete the basis");
    BasisChange p2{std::move(cols)};
    cur = change_basis(cur, p2);
    total = total.composed(p2);
    pb = construct_pair_basis(cur);
    if (!is_tree_of_height_one(pb.pairs).first) return finish_nontree(2, std::move(pb));
    if (!is_star_1(pb, m)) throw std::logic_error("normalize_pair_basis: step 2 disturbed the star");

    auto zero = [&](const FpVector& v) {
        return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
    };

    // Step 3: a nonzero value among the tail coordinates breaks the star.
    for (int r = m + 2; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s) {
            FpVector vrs = cur.value(r, s);
            if (zero(vrs)) continue;
            for (int j = 2; j <= m + 1; ++j) {
                if (!independent({vrs, cur.value(1, j)}, a.p)) continue;
                BasisChange p3 = BasisChange::permutation(a.p, fill_rest({1, r, s, j}, n));
                cur = change_basis(cur, p3);
                total = total.composed(p3);
                return finish_nontree(3, construct_pair_basis(cur));
            }
            throw std::logic_error("normalize_pair_basis: no independent partner in step 3");
        }

    // Step 4: a mixed value outside span{A(u_1,u_r)} breaks the star too.
    for (int r = 2; r <= m + 1; ++r)
        for (int s = m + 2; s <= n; ++s) {
            FpVector vrs = cur.value(r, s);
            if (in_span(vrs, {cur.value(1, r)}, a.p)) continue;
            for (int j = 2; j <= m + 1; ++j) {
                if (j == r) continue;
                if (!independent({cur.value(1, r), vrs, cur.value(1, j)}, a.p)) continue;
                BasisChange p4 = BasisChange::permutation(a.p, fill_rest({1, r, s, j}, n));
                cur = change_basis(cur, p4);
                total = total.composed(p4);
                return finish_nontree(4, construct_pair_basis(cur));
            }
            throw std::logic_error("normalize_pair_basis: no independent partner in step 4");
        }

    // Normal form reached; verify all four properties literally.
    NormalizationOutcome out{NormalizationOutcome::Kind::Normalized, total, 4, pb};
    out.p1 = is_star_1(pb, m);
    out.p2 = true;
    for (int i = m + 2; i <= n; ++i)
        if (!zero(cur.value(1, i))) out.p2 = false;
    out.p3 = true;
    for (int i = m + 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!zero(cur.value(i, j))) out.p3 = false;
    out.p4 = true;
    for (int i = 2; i <= m + 1; ++i)
        for (int j = m + 2; j <= n; ++j)
            if (!in_span(cur.value(i, j), {cur.value(1, i)}, a.p)) out.p4 = false;
    if (!(out.p1 && out.p2 && out.p3 && out.p4))
        throw std::logic_error("normalize_pair_basis: normal form failed its own verification");
    return out;
}

} // namespace schur
