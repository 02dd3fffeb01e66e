#include "ginertia/enumerator.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ginertia/isomorphism.hpp"
#include "json.hpp"

namespace ginertia {

const char* to_string(BkClass c) {
    switch (c) {
        case BkClass::Bplus: return "B+";
        case BkClass::B00: return "B00";
        case BkClass::B0: return "B0";
        case BkClass::Bminus: return "B-";
    }
    return "?";
}

std::optional<BkClass> bk_class_from_string(const std::string& s) {
    if (s == "B+" || s == "Bplus") return BkClass::Bplus;
    if (s == "B00") return BkClass::B00;
    if (s == "B0") return BkClass::B0;
    if (s == "B-" || s == "Bminus") return BkClass::Bminus;
    return std::nullopt;
}

void for_each_composition(int n, int k, const std::function<void(const BkSpec&)>& fn) {
    if (k < 1 || k > n) return;
    BkSpec spec;
    spec.k = k;
    spec.parts.assign(k, 1);
    // lexicographic: recurse on positions, largest remainder to the tail
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == k - 1) {
            spec.parts[pos] = left;
            fn(spec);
            return;
        }
        for (int v = 1; v <= left - (k - 1 - pos); ++v) {
            spec.parts[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, n);
}

std::vector<BkSpec> compositions(int n, int k) {
    std::vector<BkSpec> out;
    for_each_composition(n, k, [&](const BkSpec& s) { out.push_back(s); });
    return out;
}

BkSpec half_swap(const BkSpec& spec) {
    const int s = spec.k / 2;
    BkSpec out = spec;
    for (int i = 0; i < s; ++i) std::swap(out.parts[i], out.parts[s + i]);
    return out;
}

BkSpec dedup_key(const BkSpec& spec) {
    const int s = spec.k / 2;
    if (s == 0) return spec;
    const auto first = std::vector<int>(spec.parts.begin(), spec.parts.begin() + s);
    const auto second = std::vector<int>(spec.parts.begin() + s, spec.parts.begin() + 2 * s);
    return second > first ? half_swap(spec) : spec;
}

CensusRow classify_bk(const BkSpec& spec) {
    if (spec.k < 4) throw std::invalid_argument("classify_bk: k >= 4 required");
    spec.validate();
    CensusRow row;
    row.spec = spec;
    row.order = 0;
    for (int p : spec.parts) row.order += p;
    row.inertia = inertia_exact(realize_bk(spec));
    if (row.inertia.p <= 1)
        throw std::logic_error("classify_bk: p <= 1 cannot happen for k >= 4");
    if (row.inertia.p >= 3)
        row.cls = BkClass::Bplus;
    else if (row.inertia.eta >= 2)
        row.cls = BkClass::B00;
    else if (row.inertia.eta == 1)
        row.cls = BkClass::B0;
    else
        row.cls = BkClass::Bminus;
    return row;
}

std::vector<CensusRow> census(int k, int n_max) {
    if (k < 4 || k > 13) throw std::invalid_argument("census: k must be in [4, 13]");
    if (n_max > Graph::kMaxOrder) throw std::invalid_argument("census: n_max exceeds 64");
    std::vector<CensusRow> rows;
    for (int n = k; n <= n_max; ++n)
        for_each_composition(n, k, [&](const BkSpec& s) {
            if (dedup_key(s) == s) rows.push_back(classify_bk(s));
        });
    return rows;  // already sorted: order ascending, then parts lexicographic
}

EmptinessReport verify_empty_at(int n, BkClass which, int k_lo, int k_hi) {
    EmptinessReport rep;
    for (int k = std::max(4, k_lo); k <= std::min(13, k_hi); ++k)
        for_each_composition(n, k, [&](const BkSpec& s) {
            if (dedup_key(s) != s) return;
            CensusRow row = classify_bk(s);
            if (row.cls == which) rep.offenders.push_back(std::move(row));
        });
    rep.empty = rep.offenders.empty();
    return rep;
}

namespace {

// Per-position upper bounds of the parametric Bminus families; 99 = free.
// Lower bounds are all 1.
constexpr int F = 99;
struct Family {
    int k;
    int caps[9];
};
constexpr Family kBminusFamilies[] = {
    // k = 4
    {4, {F, F, 1, F}},
    {4, {F, 2, 2, 1}},
    {4, {F, 1, F, 1}},
    {4, {F, 1, 3, 2}},
    {4, {F, 1, 2, F}},
    {4, {3, F, 2, 1}},
    {4, {3, 2, 2, F}},
    {4, {2, F, 2, F}},
    // k = 5
    {5, {F, 3, 1, 1, 1}},
    {5, {F, 2, 1, F, 1}},
    {5, {F, 2, 1, 2, 2}},
    {5, {F, 2, 1, 1, F}},
    {5, {F, 1, F, 1, F}},
    {5, {F, 1, 2, 3, 1}},
    {5, {F, 1, 2, 2, F}},
    {5, {F, 1, 1, F, F}},
    {5, {3, 2, 2, 1, F}},
    {5, {2, F, 1, 1, 1}},
    {5, {2, 3, 1, F, 1}},
    {5, {2, 3, 1, 1, F}},
    {5, {1, F, 1, F, 1}},
    {5, {1, F, 1, 2, 2}},
    {5, {1, 2, 1, 2, F}},
    // k = 6
    {6, {F, 2, F, 1, 1, 1}},
    {6, {F, 1, F, 1, F, 1}},
    {6, {F, 1, F, 1, 2, 2}},
    {6, {F, 1, F, 1, 1, F}},
    {6, {F, 1, 1, 2, F, 1}},
    {6, {2, F, 1, 2, 1, 1}},
    {6, {2, 2, 1, 1, F, 1}},
    {6, {2, 2, 1, 1, 1, F}},
    {6, {2, 1, F, 2, 1, F}},
    {6, {1, F, 2, 1, 1, 1}},
    {6, {1, F, 1, 1, F, 1}},
    {6, {1, F, 1, 1, 2, 2}},
    {6, {1, 2, 2, 1, 1, F}},
    // k = 7
    {7, {F, 1, 2, 1, F, 1, 1}},
    {7, {F, 1, 1, 1, F, 1, F}},
    {7, {F, 1, 1, 1, 1, 2, 1}},
    {7, {2, 2, 1, 1, F, 1, F}},
    {7, {2, 1, 1, 2, 1, 1, F}},
    {7, {1, F, 2, 1, 1, 1, F}},
    {7, {1, F, 1, 1, F, 1, F}},
    {7, {1, 1, F, 1, 1, F, 1}},
    // k = 8
    {8, {F, 1, 1, F, 1, 1, F, 1}},
    {8, {1, F, 1, 1, 1, F, 1, 1}},
    // k = 9
    {9, {1, F, 1, 1, 1, F, 1, 1, F}},
};

bool fits(const BkSpec& spec, const Family& fam) {
    for (int i = 0; i < spec.k; ++i)
        if (spec.parts[i] > fam.caps[i]) return false;
    return true;
}

}  // namespace

std::optional<int> pattern_match_bminus(const BkSpec& spec) {
    if (spec.k < 4 || spec.k > 9) throw std::invalid_argument("pattern_match_bminus: k in [4, 9]");
    spec.validate();
    const BkSpec swapped = half_swap(spec);
    int id = 0;
    for (const Family& fam : kBminusFamilies) {
        if (fam.k != spec.k) {
            if (fam.k > spec.k) break;
            continue;
        }
        ++id;
        if (fits(spec, fam) || fits(swapped, fam)) return id;
    }
    return std::nullopt;
}

std::uint64_t sweep_all_graphs(int order, const std::function<void(const Graph&)>& fn,
                               SweepOptions opts) {
    if (order < 0 || order > Graph::kMaxOrder)
        throw std::invalid_argument("sweep_all_graphs: bad order");
    if (order > 7 && !opts.allow_large)
        throw std::domain_error("sweep_all_graphs: orders above 7 need allow_large");
    if (order > 10) throw std::domain_error("sweep_all_graphs: orders above 10 unsupported");
    const int pairs = order * (order - 1) / 2;
    const std::uint64_t total = 1ULL << pairs;
    std::uint64_t visited = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_edge_mask(order, mask);
        if (opts.dedup && canonical_edge_mask(g) != mask) continue;
        ++visited;
        fn(g);
    }
    return visited;
}

namespace {

std::string parts_text(const BkSpec& spec) {
    std::string full = spec.to_string();  // "B5(2,2;2,2;1)"
    const auto open = full.find('(');
    return full.substr(open + 1, full.size() - open - 2);
}

}  // namespace

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream os;
    os << "k,parts,order,p,n_neg,eta,class,dedup_key\n";
    for (const auto& r : rows)
        os << r.spec.k << ",\"" << parts_text(r.spec) << "\"," << r.order << "," << r.inertia.p
           << "," << r.inertia.n_neg << "," << r.inertia.eta << "," << to_string(r.cls) << ",\""
           << parts_text(dedup_key(r.spec)) << "\"\n";
    return os.str();
}

std::string census_json(const std::vector<CensusRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"k", r.spec.k},
                       {"parts", r.spec.parts},
                       {"order", r.order},
                       {"p", r.inertia.p},
                       {"n_neg", r.inertia.n_neg},
                       {"eta", r.inertia.eta},
                       {"class", to_string(r.cls)},
                       {"dedup_key", parts_text(dedup_key(r.spec))}});
    }
    return arr.dump();
}

std::string census_table(const std::vector<CensusRow>& rows) {
    std::ostringstream os;
    int total = 0;
    for (int k = 4; k <= 13; ++k) {
        std::vector<const CensusRow*> group;
        for (const auto& r : rows)
            if (r.spec.k == k) group.push_back(&r);
        if (group.empty()) continue;
        total += static_cast<int>(group.size());
        os << "k=" << k << "  (" << group.size() << ")\n";
        std::string line = " ";
        for (const auto* r : group) {
            const std::string item = " " + r->spec.to_string();
            if (line.size() + item.size() > 96) {
                os << line << "\n";
                line = " ";
            }
            line += item;
        }
        if (line.size() > 1) os << line << "\n";
    }
    os << "total " << total << "\n";
    return os.str();
}

}  // namespace ginertia
