#include "chebmat/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <utility>

namespace chebmat {

namespace {

// 1-based edge list helpers.
using EdgeList = std::vector<std::pair<int, int>>;

void path(EdgeList& e, int lo, int hi) {
    for (int i = lo; i < hi; ++i) e.emplace_back(i, i + 1);
}

IntMatrix from_edges(int n, const EdgeList& edges, const std::vector<int>& loops = {}) {
    IntMatrix m(n);
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : edges) {
        auto key = std::minmax(i, j);
        if (!seen.insert(key).second) continue;  // degenerate drawings repeat an edge
        m.set(i - 1, j - 1, 1);
        m.set(j - 1, i - 1, 1);
    }
    for (int v : loops) m.set(v - 1, v - 1, 1);
    return m;
}

[[noreturn]] void bounds_error(DiagramFamily f, int index, const std::string& constraint) {
    throw range_error("index " + std::to_string(index) + " out of range for " + family_name(f) +
                      " (requires " + constraint + ")");
}

}  // namespace

DiagramSpec build_diagram(DiagramFamily family, int index) {
    EdgeList e;
    switch (family) {
        case DiagramFamily::A: {
            if (index < 2) bounds_error(family, index, "n >= 2");
            path(e, 1, index);
            return {family, index, index, from_edges(index, e)};
        }
        case DiagramFamily::L: {
            if (index < 2) bounds_error(family, index, "n >= 2");
            path(e, 1, index);
            return {family, index, index, from_edges(index, e, {1})};
        }
        case DiagramFamily::D: {
            if (index < 4) bounds_error(family, index, "n >= 4");
            e = {{1, 3}, {2, 3}};
            path(e, 3, index);
            return {family, index, index, from_edges(index, e)};
        }
        case DiagramFamily::E6:
        case DiagramFamily::E7:
        case DiagramFamily::E8: {
            const int n = family_fixed_index(family);
            if (index != n) bounds_error(family, index, "n == " + std::to_string(n));
            path(e, 1, n - 1);
            e.emplace_back(3, n);
            return {family, n, n, from_edges(n, e)};
        }
        case DiagramFamily::ATilde: {
            if (index < 3) bounds_error(family, index, "n >= 3");
            path(e, 1, index);
            e.emplace_back(1, index + 1);
            e.emplace_back(index, index + 1);
            return {family, index, index + 1, from_edges(index + 1, e)};
        }
        case DiagramFamily::DTilde: {
            if (index < 3) bounds_error(family, index, "n >= 3");
            e = {{1, 3}, {2, 3}};
            path(e, 3, index - 1);
            e.emplace_back(index, index - 1);
            e.emplace_back(index + 1, index - 1);
            DiagramSpec spec{family, index, index + 1, from_edges(index + 1, e)};
            spec.convention_dependent = (index == 3);
            return spec;
        }
        case DiagramFamily::LTilde: {
            if (index < 2) bounds_error(family, index, "n >= 2");
            path(e, 1, index);
            return {family, index, index, from_edges(index, e, {1, index})};
        }
        case DiagramFamily::DLTilde: {
            if (index < 3) bounds_error(family, index, "n >= 3");
            e = {{1, 3}, {2, 3}};
            path(e, 3, index);
            return {family, index, index, from_edges(index, e, {index})};
        }
        case DiagramFamily::E6Tilde: {
            if (index != 6) bounds_error(family, index, "n == 6");
            path(e, 1, 5);
            e.emplace_back(3, 6);
            e.emplace_back(6, 7);
            return {family, 6, 7, from_edges(7, e)};
        }
        case DiagramFamily::E7Tilde: {
            if (index != 7) bounds_error(family, index, "n == 7");
            e = {{8, 1}};
            path(e, 1, 6);
            e.emplace_back(3, 7);
            return {family, 7, 8, from_edges(8, e)};
        }
        case DiagramFamily::E8Tilde: {
            if (index != 8) bounds_error(family, index, "n == 8");
            path(e, 1, 7);
            e.emplace_back(3, 8);
            e.emplace_back(7, 9);
            return {family, 8, 9, from_edges(9, e)};
        }
    }
    throw range_error("unknown diagram family");
}

bool family_is_finite(DiagramFamily family) {
    switch (family) {
        case DiagramFamily::A:
        case DiagramFamily::D:
        case DiagramFamily::E6:
        case DiagramFamily::E7:
        case DiagramFamily::E8:
        case DiagramFamily::L:
            return true;
        default:
            return false;
    }
}

bool family_is_extended(DiagramFamily family) { return !family_is_finite(family); }

int family_fixed_index(DiagramFamily family) {
    switch (family) {
        case DiagramFamily::E6:
        case DiagramFamily::E6Tilde:
            return 6;
        case DiagramFamily::E7:
        case DiagramFamily::E7Tilde:
            return 7;
        case DiagramFamily::E8:
        case DiagramFamily::E8Tilde:
            return 8;
        default:
            return 0;
    }
}

std::string family_name(DiagramFamily family) {
    switch (family) {
        case DiagramFamily::A: return "A";
        case DiagramFamily::D: return "D";
        case DiagramFamily::E6: return "E6";
        case DiagramFamily::E7: return "E7";
        case DiagramFamily::E8: return "E8";
        case DiagramFamily::L: return "L";
        case DiagramFamily::ATilde: return "Atilde";
        case DiagramFamily::DTilde: return "Dtilde";
        case DiagramFamily::E6Tilde: return "E6tilde";
        case DiagramFamily::E7Tilde: return "E7tilde";
        case DiagramFamily::E8Tilde: return "E8tilde";
        case DiagramFamily::LTilde: return "Ltilde";
        case DiagramFamily::DLTilde: return "DLtilde";
    }
    return "?";
}

std::optional<DiagramFamily> family_from_name(std::string_view name) {
    std::string s;
    for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    // accept "~" as a tilde suffix too
    if (!s.empty() && s.back() == '~') s = s.substr(0, s.size() - 1) + "tilde";
    if (s == "a") return DiagramFamily::A;
    if (s == "d") return DiagramFamily::D;
    if (s == "e6") return DiagramFamily::E6;
    if (s == "e7") return DiagramFamily::E7;
    if (s == "e8") return DiagramFamily::E8;
    if (s == "l") return DiagramFamily::L;
    if (s == "atilde") return DiagramFamily::ATilde;
    if (s == "dtilde") return DiagramFamily::DTilde;
    if (s == "e6tilde") return DiagramFamily::E6Tilde;
    if (s == "e7tilde") return DiagramFamily::E7Tilde;
    if (s == "e8tilde") return DiagramFamily::E8Tilde;
    if (s == "ltilde") return DiagramFamily::LTilde;
    if (s == "dltilde") return DiagramFamily::DLTilde;
    return std::nullopt;
}

IntMatrix reverse_labeling(const IntMatrix& x) { return x.reversal_conjugate(); }

int coxeter_number(DiagramFamily family, int index) {
    switch (family) {
        case DiagramFamily::A:
            if (index < 2) bounds_error(family, index, "n >= 2");
            return index + 1;
        case DiagramFamily::L:
            if (index < 2) bounds_error(family, index, "n >= 2");
            return 2 * index + 1;
        case DiagramFamily::D:
            if (index < 4) bounds_error(family, index, "n >= 4");
            return 2 * index - 2;
        case DiagramFamily::E6: return 12;
        case DiagramFamily::E7: return 18;
        case DiagramFamily::E8: return 30;
        default:
            throw unsupported_error("Coxeter number is defined for the finite families only, got " +
                                    family_name(family));
    }
}

bool is_connected(const IntMatrix& x) {
    const int n = x.dim();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
            if (w != v && !seen[w] && sgn(x.at(v, w)) != 0) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

namespace {

struct VertexShape {
    long degree = 0;  // counting loop once
    bool loop = false;
};

std::vector<VertexShape> shapes(const IntMatrix& x) {
    const int n = x.dim();
    std::vector<VertexShape> s(n);
    for (int i = 0; i < n; ++i) {
        long d = 0;
        for (int j = 0; j < n; ++j)
            if (j != i && sgn(x.at(i, j)) != 0) ++d;
        s[i].loop = sgn(x.at(i, i)) != 0;
        s[i].degree = d + (s[i].loop ? 1 : 0);
    }
    return s;
}

// Backtracking graph isomorphism specialized to 0/1 symmetric matrices.
// perm[i] = input vertex assigned to canonical vertex i.
std::optional<std::vector<int>> find_relabeling(const IntMatrix& canon, const IntMatrix& x) {
    const int n = canon.dim();
    auto cs = shapes(canon);
    auto xs = shapes(x);

    auto sorted_sig = [](const std::vector<VertexShape>& v) {
        std::vector<std::pair<long, bool>> sig;
        sig.reserve(v.size());
        for (const auto& s : v) sig.emplace_back(s.degree, s.loop);
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    if (sorted_sig(cs) != sorted_sig(xs)) return std::nullopt;

    // Assign canonical vertices in decreasing degree order so branch vertices
    // are pinned first.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return cs[a].degree > cs[b].degree; });

    std::vector<int> perm(n, -1);
    std::vector<char> used(n, 0);

    auto consistent = [&](int ci, int xi, int depth) {
        if (cs[ci].degree != xs[xi].degree || cs[ci].loop != xs[xi].loop) return false;
        for (int d = 0; d < depth; ++d) {
            int cj = order[d];
            if (canon.at(ci, cj) != x.at(xi, perm[cj])) return false;
        }
        return true;
    };

    std::vector<int> choice(n, -1);
    int depth = 0;
    while (true) {
        int ci = order[depth];
        int start = choice[depth] + 1;
        int pick = -1;
        for (int xi = start; xi < n; ++xi) {
            if (used[xi]) continue;
            if (consistent(ci, xi, depth)) {
                pick = xi;
                break;
            }
        }
        if (pick < 0) {
            choice[depth] = -1;
            if (depth == 0) return std::nullopt;
            --depth;
            int prev = order[depth];
            used[perm[prev]] = 0;
            perm[prev] = -1;
            continue;
        }
        choice[depth] = pick;
        perm[ci] = pick;
        used[pick] = 1;
        if (depth + 1 == n) return perm;
        ++depth;
    }
}

}  // namespace

std::optional<FamilyMatch> identify_family(const IntMatrix& x) {
    const int n = x.dim();
    if (!x.is_symmetric()) throw validation_error("identify_family requires a symmetric matrix");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sgn(x.at(i, j)) < 0) throw validation_error("identify_family requires nonnegative entries");
    if (!is_connected(x)) throw validation_error("identify_family requires a connected graph");

    // Diagram adjacencies are 0/1 matrices.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (x.at(i, j) > 1) return std::nullopt;

    // Finite families first, so relabeled finite diagrams are never reported
    // under a degenerate extended name (DTilde_3 is A_4-shaped).
    std::vector<std::pair<DiagramFamily, int>> candidates;
    auto add = [&](DiagramFamily f, int idx) { candidates.emplace_back(f, idx); };
    if (n >= 2) add(DiagramFamily::A, n);
    if (n >= 4) add(DiagramFamily::D, n);
    if (n == 6) add(DiagramFamily::E6, 6);
    if (n == 7) add(DiagramFamily::E7, 7);
    if (n == 8) add(DiagramFamily::E8, 8);
    if (n >= 2) add(DiagramFamily::L, n);
    if (n >= 4) add(DiagramFamily::ATilde, n - 1);
    if (n >= 4) add(DiagramFamily::DTilde, n - 1);
    if (n == 7) add(DiagramFamily::E6Tilde, 6);
    if (n == 8) add(DiagramFamily::E7Tilde, 7);
    if (n == 9) add(DiagramFamily::E8Tilde, 8);
    if (n >= 2) add(DiagramFamily::LTilde, n);
    if (n >= 3) add(DiagramFamily::DLTilde, n);

    for (auto [family, index] : candidates) {
        DiagramSpec spec = build_diagram(family, index);
        if (auto perm = find_relabeling(spec.adjacency, x))
            return FamilyMatch{family, index, std::move(*perm)};
    }
    return std::nullopt;
}

}  // namespace chebmat
