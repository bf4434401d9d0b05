#include "stackcoh/finite_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcoh {

namespace {

constexpr int kTableLimit = 1024;

std::shared_ptr<const FiniteGroup::Table> build_abelian_table(const std::vector<Int>& factors) {
    Int order = 1;
    for (const Int& f : factors) order *= f;
    if (order > kTableLimit) return nullptr;
    int n = static_cast<int>(order);
    std::vector<int> radix(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) radix[i] = static_cast<int>(factors[i]);

    auto decode = [&](int x, std::vector<int>& digits) {
        for (std::size_t i = 0; i < radix.size(); ++i) {
            digits[i] = x % radix[i];
            x /= radix[i];
        }
    };
    auto encode = [&](const std::vector<int>& digits) {
        int x = 0, stride = 1;
        for (std::size_t i = 0; i < radix.size(); ++i) {
            x += digits[i] * stride;
            stride *= radix[i];
        }
        return x;
    };

    auto t = std::make_shared<FiniteGroup::Table>();
    t->n = n;
    t->mul.resize(static_cast<std::size_t>(n) * n);
    t->identity = 0;
    t->inverse.resize(n);
    std::vector<int> da(radix.size()), db(radix.size()), dc(radix.size());
    for (int a = 0; a < n; ++a) {
        decode(a, da);
        for (std::size_t i = 0; i < radix.size(); ++i) dc[i] = (radix[i] - da[i]) % radix[i];
        t->inverse[a] = encode(dc);
        for (int b = 0; b < n; ++b) {
            decode(b, db);
            for (std::size_t i = 0; i < radix.size(); ++i) dc[i] = (da[i] + db[i]) % radix[i];
            t->mul[static_cast<std::size_t>(a) * n + b] = encode(dc);
        }
    }
    return t;
}

}  // namespace

FiniteGroup FiniteGroup::cyclic(const Int& d) {
    if (d < 1) throw std::invalid_argument("cyclic order must be positive");
    FiniteGroup g;
    g.kind_ = Kind::cyclic;
    g.order_ = d;
    if (d > 1) g.factors_ = {d};
    g.table_ = build_abelian_table(g.factors_);
    return g;
}

FiniteGroup FiniteGroup::abelian(const std::vector<Int>& cyclic_orders) {
    for (const Int& f : cyclic_orders)
        if (f < 1) throw std::invalid_argument("cyclic factor must be positive");
    // Canonicalize to the invariant-factor chain.
    zlin::Mat rel(cyclic_orders.size(), cyclic_orders.size());
    for (std::size_t i = 0; i < cyclic_orders.size(); ++i) rel(i, i) = cyclic_orders[i];
    zlin::AbelianGroup a = zlin::group_from_presentation(cyclic_orders.size(), rel);

    FiniteGroup g;
    g.kind_ = a.invariant_factors.size() <= 1 ? Kind::cyclic : Kind::abelian;
    g.factors_ = a.invariant_factors;
    g.order_ = 1;
    for (const Int& f : g.factors_) g.order_ *= f;
    g.table_ = build_abelian_table(g.factors_);
    return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& mul) {
    const int n = static_cast<int>(mul.size());
    if (n == 0) throw std::invalid_argument("empty multiplication table");
    if (n > 256) throw std::invalid_argument("table groups supported up to order 256");
    auto t = std::make_shared<Table>();
    t->n = n;
    t->mul.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(mul[i].size()) != n)
            throw std::invalid_argument("multiplication table is not square");
        for (int j = 0; j < n; ++j) {
            int v = mul[i][j];
            if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
            t->mul[static_cast<std::size_t>(i) * n + j] = v;
        }
    }
    // identity
    int e = -1;
    for (int c = 0; c < n && e < 0; ++c) {
        bool ok = true;
        for (int x = 0; x < n; ++x)
            if (t->at(c, x) != x || t->at(x, c) != x) {
                ok = false;
                break;
            }
        if (ok) e = c;
    }
    if (e < 0) throw std::invalid_argument("table has no identity element");
    t->identity = e;
    // inverses
    t->inverse.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (t->at(a, b) == e && t->at(b, a) == e) t->inverse[a] = b;
    for (int a = 0; a < n; ++a)
        if (t->inverse[a] < 0) throw std::invalid_argument("table element has no inverse");
    // associativity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t->at(t->at(a, b), c) != t->at(a, t->at(b, c)))
                    throw std::invalid_argument("multiplication table is not associative");

    FiniteGroup g;
    g.kind_ = Kind::table;
    g.order_ = n;
    g.table_ = std::move(t);
    return g;
}

FiniteGroup FiniteGroup::dihedral(int two_m) {
    if (two_m < 2 || two_m % 2 != 0) throw std::invalid_argument("dihedral order must be even");
    int m = two_m / 2;
    std::vector<std::vector<int>> mul(two_m, std::vector<int>(two_m));
    auto idx = [m](int i, int eps) { return ((i % m) + m) % m + m * (eps & 1); };
    for (int i = 0; i < m; ++i)
        for (int e1 = 0; e1 < 2; ++e1)
            for (int j = 0; j < m; ++j)
                for (int e2 = 0; e2 < 2; ++e2) {
                    // (r^i s^e1)(r^j s^e2) = r^{i + (-1)^e1 j} s^{e1+e2}
                    int k = e1 ? i - j : i + j;
                    mul[idx(i, e1)][idx(j, e2)] = idx(k, e1 ^ e2);
                }
    return from_table(mul);
}

bool FiniteGroup::is_abelian() const {
    if (kind_ != Kind::table) return true;
    const Table& t = *table_;
    for (int a = 0; a < t.n; ++a)
        for (int b = a + 1; b < t.n; ++b)
            if (t.at(a, b) != t.at(b, a)) return false;
    return true;
}

bool FiniteGroup::is_cyclic() const {
    if (kind_ == Kind::cyclic) return true;
    if (kind_ == Kind::abelian) return factors_.size() <= 1;
    const Table& t = *table_;
    for (int a = 0; a < t.n; ++a) {
        int x = a, ord = 1;
        while (x != t.identity) {
            x = t.at(x, a);
            ++ord;
        }
        if (ord == t.n) return true;
    }
    return false;
}

std::vector<Int> FiniteGroup::invariant_factors() const {
    if (kind_ != Kind::table) return factors_;
    if (!is_abelian()) throw std::logic_error("invariant factors of a nonabelian group");
    return abelianization().invariant_factors;
}

const FiniteGroup::Table& FiniteGroup::table() const {
    if (!table_) throw std::logic_error("group too large to materialize a table");
    return *table_;
}

zlin::AbelianGroup FiniteGroup::abelianization() const {
    if (kind_ != Kind::table) return zlin::AbelianGroup{0, factors_};
    // Presentation on all elements: x_a + x_b - x_{ab} = 0.
    const Table& t = *table_;
    zlin::Mat rel(static_cast<std::size_t>(t.n) * t.n, t.n);
    std::size_t r = 0;
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b, ++r) {
            rel(r, a) += 1;
            rel(r, b) += 1;
            rel(r, t.at(a, b)) -= 1;
        }
    return zlin::group_from_presentation(t.n, rel);
}

bool FiniteGroup::operator==(const FiniteGroup& o) const {
    if (kind_ != o.kind_ || order_ != o.order_) return false;
    if (kind_ == Kind::table) return table_->mul == o.table_->mul;
    return factors_ == o.factors_;
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators) {
    const FiniteGroup::Table& t = g.table();
    std::vector<bool> in(t.n, false);
    std::vector<int> work{t.identity};
    in[t.identity] = true;
    for (int x : generators) {
        if (x < 0 || x >= t.n) throw std::invalid_argument("subgroup generator out of range");
        if (!in[x]) {
            in[x] = true;
            work.push_back(x);
        }
    }
    // close under multiplication
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t i = 0; i < work.size(); ++i)
            for (std::size_t j = 0; j < work.size(); ++j) {
                int p = t.at(work[i], work[j]);
                if (!in[p]) {
                    in[p] = true;
                    work.push_back(p);
                    grew = true;
                }
            }
    }
    Subgroup s;
    for (int x = 0; x < t.n; ++x)
        if (in[x]) s.elements.push_back(x);
    s.position.assign(t.n, -1);
    for (std::size_t i = 0; i < s.elements.size(); ++i) s.position[s.elements[i]] = static_cast<int>(i);
    const int m = static_cast<int>(s.elements.size());
    if (t.n % m != 0) throw std::logic_error("closure is not a subgroup");
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) mul[i][j] = s.position[t.at(s.elements[i], s.elements[j])];
    s.group = FiniteGroup::from_table(mul);
    s.index = Int(t.n / m);
    return s;
}

Subgroup verified_embedding(const FiniteGroup& g, const FiniteGroup& h,
                            const std::vector<int>& embedding) {
    const FiniteGroup::Table& tg = g.table();
    const FiniteGroup::Table& th = h.table();
    if (static_cast<int>(embedding.size()) != th.n)
        throw std::invalid_argument("embedding must list an image for every element");
    std::vector<bool> seen(tg.n, false);
    for (int x : embedding) {
        if (x < 0 || x >= tg.n) throw std::invalid_argument("embedding image out of range");
        if (seen[x]) throw std::invalid_argument("embedding is not injective");
        seen[x] = true;
    }
    for (int a = 0; a < th.n; ++a)
        for (int b = 0; b < th.n; ++b)
            if (embedding[th.at(a, b)] != tg.at(embedding[a], embedding[b]))
                throw std::invalid_argument("embedding is not a homomorphism");
    return subgroup_closure(g, embedding);
}

}  // namespace gcoh
