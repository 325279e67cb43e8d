#include "schur/altmap.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

namespace schur {

AltMap::AltMap(Residue p_, int n_, int m_) : p(p_), n(n_), m(m_) {
    if (!is_prime(p_)) throw NonPrimeModulus("modulus " + std::to_string(p_) + " is not prime");
    if (n_ < 0 || m_ < 0) throw InfeasibleDimensions("negative dimension");
}

FpVector AltMap::value(int i, int j) const {
    if (i < 1 || j < 1 || i > n || j > n)
        throw IndexOutOfRange("pair index outside 1.." + std::to_string(n));
    if (i == j) return FpVector(m, 0);
    bool flip = i > j;
    auto it = table.find(flip ? IndexPair{j, i} : IndexPair{i, j});
    if (it == table.end()) return FpVector(m, 0);
    if (!flip) return it->second;
    FpVector v = it->second;
    for (auto& x : v) x = fp_neg(x, p);
    return v;
}

void AltMap::set(int i, int j, FpVector v) {
    if (i < 1 || j > n || i >= j)
        throw IndexOutOfRange("entry requires 1 <= i < j <= n");
    if (static_cast<int>(v.size()) != m) throw BadVectorLength("value length != dim V");
    for (auto& x : v) x %= p;
    if (std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; }))
        table.erase({i, j});
    else
        table[{i, j}] = std::move(v);
}

FpMatrix AltMap::pair_value_matrix() const {
    std::size_t npairs = std::size_t(n) * (n - 1) / 2;
    FpMatrix mat(p, m, npairs);
    std::size_t c = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++c) {
            auto it = table.find({i, j});
            if (it == table.end()) continue;
            for (int a = 0; a < m; ++a) mat.at(a, c) = it->second[a];
        }
    return mat;
}

FpMatrix AltMap::stacked_matrix() const {
    FpMatrix mat(p, std::size_t(m) * n, n);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i) {
            FpVector v = value(i, j); // column i contributes A(e_i, e_j)
            for (int a = 0; a < m; ++a) mat.at(std::size_t(j - 1) * m + a, i - 1) = v[a];
        }
    return mat;
}

AltMap parse_altmap(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedDocument(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw MalformedDocument("top level must be an object");
    for (const char* key : {"p", "dimU", "dimV"})
        if (!doc.contains(key) || !doc[key].is_number_integer())
            throw MalformedDocument(std::string("missing or non-integer field \"") + key + "\"");

    long long p = doc["p"].get<long long>();
    long long n = doc["dimU"].get<long long>();
    long long m = doc["dimV"].get<long long>();
    if (p < 2 || p >= (1LL << 31) || !is_prime(std::uint64_t(p)))
        throw NonPrimeModulus("field \"p\" = " + std::to_string(p) + " is not a prime < 2^31");
    if (n < 0 || m < 0) throw MalformedDocument("dimU/dimV must be non-negative");

    AltMap a{Residue(p), int(n), int(m)};
    if (doc.contains("entries")) {
        if (!doc["entries"].is_array()) throw MalformedDocument("\"entries\" must be an array");
        for (const auto& e : doc["entries"]) {
            if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("value"))
                throw MalformedDocument("entry needs fields i, j, value");
            long long i = e["i"].get<long long>();
            long long j = e["j"].get<long long>();
            if (i < 1 || j <= i || j > n)
                throw IndexOutOfRange("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") violates 1 <= i < j <= dimU");
            if (!e["value"].is_array() || e["value"].size() != std::size_t(m))
                throw BadVectorLength("value of (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") must have dimV entries");
            if (a.table.count({int(i), int(j)}))
                throw MalformedDocument("duplicate entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
            FpVector v(m);
            for (std::size_t t = 0; t < v.size(); ++t) {
                if (!e["value"][t].is_number_integer())
                    throw MalformedDocument("value components must be integers");
                v[t] = fp_reduce(e["value"][t].get<long long>(), Residue(p));
            }
            if (std::any_of(v.begin(), v.end(), [](Residue x) { return x != 0; }))
                a.table[{int(i), int(j)}] = std::move(v);
        }
    }
    return a;
}

std::string serialize_altmap(const AltMap& a) {
    nlohmann::json doc;
    doc["p"] = a.p;
    doc["dimU"] = a.n;
    doc["dimV"] = a.m;
    doc["entries"] = nlohmann::json::array();
    for (const auto& [pair, v] : a.table) {
        nlohmann::json e;
        e["i"] = pair.first;
        e["j"] = pair.second;
        e["value"] = v;
        doc["entries"].push_back(std::move(e));
    }
    return doc.dump(2) + "\n";
}

void validate(const AltMap& a) {
    if (a.m == 0) return; // abelian degenerate case
    if (rank(a.pair_value_matrix()) != std::size_t(a.m))
        throw ImageDoesNotSpan("pair values span a proper subspace of V");
}

FpVector apply(const AltMap& a, const FpVector& x, const FpVector& y) {
    if (x.size() != std::size_t(a.n) || y.size() != std::size_t(a.n))
        throw BadVectorLength("apply expects vectors of length dim U");
    FpVector out(a.m, 0);
    for (const auto& [pair, v] : a.table) {
        auto [i, j] = pair;
        // coefficient of A(e_i,e_j) in A(x,y) is x_i y_j - x_j y_i
        Residue c = fp_sub(fp_mul(x[i - 1], y[j - 1], a.p), fp_mul(x[j - 1], y[i - 1], a.p), a.p);
        if (c == 0) continue;
        for (int t = 0; t < a.m; ++t) out[t] = fp_add(out[t], fp_mul(c, v[t], a.p), a.p);
    }
    return out;
}

std::vector<FpVector> radical(const AltMap& a) {
    if (a.m == 0) {
        std::vector<FpVector> all;
        for (int i = 0; i < a.n; ++i) {
            FpVector e(a.n, 0);
            e[i] = 1;
            all.push_back(std::move(e));
        }
        return all;
    }
    return kernel_basis(a.stacked_matrix());
}

BasisChange::BasisChange(FpMatrix m) : matrix(std::move(m)) {
    if (matrix.rows != matrix.cols) throw SingularMatrix("basis change must be square");
    if (rank(matrix) != matrix.rows) throw SingularMatrix("basis change matrix is singular");
}

BasisChange BasisChange::identity(Residue p, int n) {
    return BasisChange(FpMatrix::identity(p, n));
}

BasisChange BasisChange::permutation(Residue p, const std::vector<int>& image) {
    FpMatrix m(p, image.size(), image.size());
    for (std::size_t k = 0; k < image.size(); ++k) {
        int i = image[k];
        if (i < 1 || i > int(image.size())) throw IndexOutOfRange("permutation image out of range");
        m.at(i - 1, k) = 1;
    }
    return BasisChange(m); // duplicates caught by the rank check
}

BasisChange BasisChange::composed(const BasisChange& then) const {
    // (this o then): first map coordinates through `then`, then this.
    const FpMatrix& a = matrix;
    const FpMatrix& b = then.matrix;
    FpMatrix out(a.p, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            Residue aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                out.at(i, j) = fp_add(out.at(i, j), fp_mul(aik, b.at(k, j), a.p), a.p);
        }
    return BasisChange(std::move(out));
}

AltMap change_basis(const AltMap& a, const BasisChange& pc) {
    if (pc.matrix.rows != std::size_t(a.n)) throw BadVectorLength("basis change dimension mismatch");
    AltMap out(a.p, a.n, a.m);
    std::vector<FpVector> cols(a.n);
    for (int k = 0; k < a.n; ++k) {
        cols[k].resize(a.n);
        for (int r = 0; r < a.n; ++r) cols[k][r] = pc.matrix.at(r, k);
    }
    for (int i = 1; i <= a.n; ++i)
        for (int j = i + 1; j <= a.n; ++j) {
            FpVector v = apply(a, cols[i - 1], cols[j - 1]);
            out.set(i, j, std::move(v));
        }
    return out;
}

QuotientResult quotient_by_radical(const AltMap& a) {
    std::vector<FpVector> rad = radical(a);
    int n2 = a.n - int(rad.size());

    // Complement: leftmost standard basis vectors independent modulo the radical.
    SpanAccumulator acc(a.p, a.n);
    for (const auto& r : rad) acc.insert(r);
    std::vector<int> kept;
    for (int i = 1; i <= a.n && int(kept.size()) < n2; ++i) {
        FpVector e(a.n, 0);
        e[i - 1] = 1;
        if (acc.insert(e)) kept.push_back(i);
    }

    // Solve [complement | radical] c = e_i and keep the complement part.
    FpMatrix sys(a.p, a.n, a.n + a.n); // augmented with all n unit vectors
    for (int c = 0; c < n2; ++c) sys.at(kept[c] - 1, c) = 1;
    for (std::size_t c = 0; c < rad.size(); ++c)
        for (int r = 0; r < a.n; ++r) sys.at(r, n2 + c) = rad[c][r];
    for (int i = 0; i < a.n; ++i) sys.at(i, a.n + i) = 1;
    RrefResult red = rref(sys);

    FpMatrix proj(a.p, n2, a.n);
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
        std::size_t pc = red.pivots[r];
        if (pc >= std::size_t(n2)) continue; // radical coordinate
        for (int i = 0; i < a.n; ++i) proj.at(pc, i) = red.matrix.at(r, a.n + i);
    }

    AltMap q(a.p, n2, a.m);
    for (int x = 0; x < n2; ++x)
        for (int y = x + 1; y < n2; ++y)
            q.set(x + 1, y + 1, a.value(kept[x], kept[y]));

    return {std::move(q), std::move(proj), std::move(kept)};
}

AltMap random_altmap(Residue p, int n, int m, std::uint64_t seed) {
    long long npairs = static_cast<long long>(n) * (n - 1) / 2;
    if (m > npairs)
        throw InfeasibleDimensions("dim V = " + std::to_string(m) + " exceeds C(" + std::to_string(n) + ",2)");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Residue> dist(0, p - 1);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        AltMap a(p, n, m);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                FpVector v(m);
                for (auto& x : v) x = dist(rng);
                a.set(i, j, std::move(v));
            }
        if (m == 0 || rank(a.pair_value_matrix()) == std::size_t(m)) return a;
    }
    throw InfeasibleDimensions("could not sample a spanning map (dimensions too tight)");
}

} // namespace schur
