#include "rsl/bijections.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rsl {

namespace {

bool word_is(const ParkingFunction& pf, bool decreasing) {
    auto w = word(pf);
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (decreasing && w[i] < w[i + 1]) return false;
        if (!decreasing && w[i] > w[i + 1]) return false;
    }
    return true;
}

// labels for a fixed path with a prescribed rank->car assignment:
// cars listed in increasing rank order.
ParkingFunction label_by_rank_order(const DyckPath& path, const std::vector<int>& cars_low_to_high) {
    const int n = path.shape.n;
    std::vector<long> ranks = step_ranks(path);
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::sort(rows.begin(), rows.end(), [&](int a, int b) { return ranks[a] < ranks[b]; });
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[rows[i]] = cars_low_to_high[i];
    return ParkingFunction(path, labels);
}

}  // namespace

ParkingFunction hstr(const ParkingFunction& pf) {
    if (!word_is(pf, true)) throw WordNotDecreasing("hstr: word must be n...21");
    const int m = pf.path.shape.m, n = pf.path.shape.n;
    std::vector<int> col(n);
    for (int y = 0; y < n; ++y) col[y] = pf.path.col[y] + y;
    DyckPath stretched(GridShape(m + n, n), col);
    // word 12...n: car 1 at the highest rank
    std::vector<int> cars(n);
    for (int i = 0; i < n; ++i) cars[i] = n - i;
    return label_by_rank_order(stretched, cars);
}

ParkingFunction hstr_inverse(const ParkingFunction& pf) {
    if (!word_is(pf, false)) throw WordNotDecreasing("hstr_inverse: word must be 12...n");
    const int m = pf.path.shape.m, n = pf.path.shape.n;
    if (m <= n) throw InvalidArgument("hstr_inverse: shape must be (m+n, n)");
    std::vector<int> col(n);
    for (int y = 0; y < n; ++y) {
        col[y] = pf.path.col[y] - y;
        if (col[y] < 0) throw InvalidArgument("hstr_inverse: path has consecutive north steps");
    }
    DyckPath shrunk(GridShape(m - n, n), col);
    std::vector<int> cars(n);
    std::iota(cars.begin(), cars.end(), 1);
    return label_by_rank_order(shrunk, cars);
}

ParkingFunction vstr(const ParkingFunction& pf) {
    Composition pid = pides(pf);
    for (size_t i = 0; i + 1 < pid.size(); ++i)
        if (pid[i] < pid[i + 1])
            throw PidesNotWeaklyDecreasing("vstr: pides must be weakly decreasing");
    const int m = pf.path.shape.m, n = pf.path.shape.n;
    std::vector<int> count(m, 0);
    for (int y = 0; y < n; ++y) count[pf.path.col[y]]++;
    // every column gains a bottom cell
    std::vector<std::vector<int>> column_cars(m);
    for (int y = 0; y < n; ++y) column_cars[pf.path.col[y]].push_back(pf.labels[y] + m);
    std::vector<int> col;
    for (int j = 0; j < m; ++j) {
        col.push_back(j);
        for (int k = 0; k < count[j]; ++k) col.push_back(j);
    }
    DyckPath path(GridShape(m, n + m), col);
    // cars 1..m at the bottom cells, rank decreasing (car 1 at the highest)
    std::vector<long> ranks = step_ranks(path);
    std::vector<std::pair<long, int>> bottoms;
    std::vector<int> labels(n + m, 0);
    int row = 0;
    for (int j = 0; j < m; ++j) {
        bottoms.push_back({ranks[row], row});
        for (int k = 0; k < count[j]; ++k) labels[row + 1 + k] = column_cars[j][k];
        row += 1 + count[j];
    }
    std::sort(bottoms.begin(), bottoms.end());
    for (int i = 0; i < m; ++i) labels[bottoms[i].second] = m - i;
    return ParkingFunction(path, labels);
}

ParkingFunction vstr_inverse(const ParkingFunction& pf) {
    const int m = pf.path.shape.m, n = pf.path.shape.n - m;
    if (n < 0) throw InvalidArgument("vstr_inverse: too few rows");
    std::vector<int> col;
    std::vector<int> labels;
    int row = 0;
    for (int j = 0; j < m; ++j) {
        if (row >= pf.path.shape.n || pf.path.col[row] != j)
            throw InvalidArgument("vstr_inverse: column " + std::to_string(j) + " is empty");
        if (pf.labels[row] > m)
            throw InvalidArgument("vstr_inverse: bottom cell holds a shifted car");
        ++row;
        while (row < pf.path.shape.n && pf.path.col[row] == j) {
            if (pf.labels[row] <= m) throw InvalidArgument("vstr_inverse: small car above bottom");
            col.push_back(j);
            labels.push_back(pf.labels[row] - m);
            ++row;
        }
    }
    return ParkingFunction(DyckPath(GridShape(m, n), col), labels);
}

namespace {

// lattice points where a column starts, in path order, with the endpoint
// (m, n) appended; the start (0,0) comes first.
std::vector<std::pair<int, int>> valley_points(const DyckPath& p) {
    std::vector<std::pair<int, int>> v;
    for (int y = 0; y < p.shape.n; ++y)
        if (y == 0 || p.col[y] != p.col[y - 1]) v.push_back({p.col[y], y});
    v.push_back({p.shape.m, p.shape.n});
    return v;
}

DyckPath transpose_path(const DyckPath& p) {
    // reverse the step word and swap N <-> E
    const int m = p.shape.m, n = p.shape.n;
    std::vector<int> steps;  // 1 = north, 0 = east
    int x = 0;
    for (int y = 0; y < n; ++y) {
        while (x < p.col[y]) {
            steps.push_back(0);
            ++x;
        }
        steps.push_back(1);
    }
    while (x < m) {
        steps.push_back(0);
        ++x;
    }
    std::reverse(steps.begin(), steps.end());
    std::vector<int> col;
    int x2 = 0;
    for (int s : steps) {
        if (s == 1) ++x2;        // north step of p becomes an east step
        else col.push_back(x2);  // east step becomes a north step
    }
    return DyckPath(GridShape(n, m), col);
}

}  // namespace

ParkingFunction hook_transpose(const ParkingFunction& pf) {
    const int n = pf.path.shape.n, m = pf.path.shape.m;
    Composition pid = pides(pf);
    int k = pid.empty() ? 0 : pid[0];
    for (size_t i = 1; i < pid.size(); ++i)
        if (pid[i] != 1) throw PidesNotHook("hook_transpose: pides must be (k,1^{n-k})");
    if (!(k >= 1 && (int)pid.size() == n - k + 1))
        throw PidesNotHook("hook_transpose: pides must be (k,1^{n-k})");
    if (k > m) throw PidesNotHook("hook_transpose: k exceeds the transpose car count");

    auto valleys = valley_points(pf.path);
    const int j = (int)valleys.size() - 1;  // number of columns
    std::map<std::pair<int, int>, int> valley_index;
    for (int i = 0; i < j; ++i) valley_index.emplace(valleys[i], i);
    std::vector<char> selected(j, 0);
    std::vector<int> rowof(n + 1);
    for (int y = 0; y < n; ++y) rowof[pf.labels[y]] = y;
    for (int car = 1; car <= k; ++car) {
        int row = rowof[car];
        auto it = valley_index.find({pf.path.col[row], row});
        if (it == valley_index.end())
            throw PidesNotHook("hook_transpose: car " + std::to_string(car) +
                               " is not at a column bottom");
        selected[it->second] = 1;
    }
    if (!selected[0]) throw PidesNotHook("hook_transpose: car k is not at the origin cell");

    DyckPath tp = transpose_path(pf.path);
    auto tvalleys = valley_points(tp);
    const int j2 = (int)tvalleys.size() - 1;
    if (j2 != j) throw Error("hook_transpose: transpose changed the column count");
    std::map<std::pair<int, int>, int> tv_index;
    for (int i = 0; i < j2; ++i) tv_index.emplace(tvalleys[i], i);
    // selected interior valley (x,y) pairs with the transpose valley at
    // (n - y, m - x); the origin circle pairs with the transpose origin.
    std::vector<char> tselected(j2, 0);
    tselected[0] = 1;
    for (int i = 1; i < j; ++i) {
        if (!selected[i]) continue;
        auto [x, y] = valleys[i];
        auto it = tv_index.find({n - y, m - x});
        if (it == tv_index.end()) throw Error("hook_transpose: valley image not found");
        tselected[it->second] = 1;
    }
    // cars 1..k at the selected column bottoms, rank decreasing; the rest
    // rank increasing on the remaining north steps.
    std::vector<long> tranks = step_ranks(tp);
    std::vector<char> sel_row(m, 0);
    for (int i = 0; i < j2; ++i)
        if (tselected[i]) sel_row[tvalleys[i].second] = 1;
    std::vector<int> sel_rows, other_rows;
    for (int y = 0; y < m; ++y) (sel_row[y] ? sel_rows : other_rows).push_back(y);
    std::sort(sel_rows.begin(), sel_rows.end(),
              [&](int a, int b) { return tranks[a] > tranks[b]; });
    std::sort(other_rows.begin(), other_rows.end(),
              [&](int a, int b) { return tranks[a] < tranks[b]; });
    std::vector<int> labels(m);
    for (int i = 0; i < (int)sel_rows.size(); ++i) labels[sel_rows[i]] = i + 1;
    for (int i = 0; i < (int)other_rows.size(); ++i) labels[other_rows[i]] = k + 1 + i;
    ParkingFunction out(tp, labels);
    Composition opid = pides(out);
    if (!(opid[0] == k && (int)opid.size() == m - k + 1))
        throw Error("hook_transpose: image pides is not the expected hook");
    return out;
}

namespace {

struct PatternInfo {
    int pos;            // pides index of the left part of the window
    int base;           // cars base+1..base+4 are involved
    bool is13;          // (1,3) window vs (2,2) window
    std::string word4;  // relative order of the four cars, e.g. "2341"
    std::vector<std::pair<int, int>> shared;  // pairs among the four sharing a column
};

std::string subword_of(const ParkingFunction& pf, int base) {
    std::vector<long> cr = car_ranks(pf);
    std::vector<int> four{1, 2, 3, 4};
    std::sort(four.begin(), four.end(),
              [&](int a, int b) { return cr[base + a - 1] > cr[base + b - 1]; });
    std::string s;
    for (int x : four) s += char('0' + x);
    return s;
}

std::vector<std::pair<int, int>> shared_columns(const ParkingFunction& pf, int base) {
    std::vector<int> colof(5, -1);
    for (int y = 0; y < pf.cars(); ++y) {
        int c = pf.labels[y] - base;
        if (c >= 1 && c <= 4) colof[c] = pf.path.col[y];
    }
    std::vector<std::pair<int, int>> shared;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            if (colof[i] == colof[j]) shared.push_back({i, j});
    return shared;
}

// placement label of a 22-window: 1..5 for (i)..(v); 0 for the doubly shared
// (1,4)+(2,3) configuration, whose word is forced to 3412 (fixed anyway)
int placement22(const std::vector<std::pair<int, int>>& shared) {
    bool p13 = false, p14 = false, p23 = false, p24 = false;
    for (auto [a, b] : shared) {
        if (a == 1 && b == 3) p13 = true;
        if (a == 1 && b == 4) p14 = true;
        if (a == 2 && b == 3) p23 = true;
        if (a == 2 && b == 4) p24 = true;
    }
    if (p13 && p24) return 1;
    if (p14 && p23) return 0;
    if (p14) return 2;
    if (p24) return 3;
    if (p13) return 4;
    if (p23) return 5;
    throw Error("phi: 22-window with no shared column");
}

int placement13(const std::vector<std::pair<int, int>>& shared) {
    // cars 2,3,4 occupy distinct columns; car 1 shares with exactly one
    if (shared.size() != 1) throw Error("phi: 13-window sharing is not unique");
    auto [a, b] = shared[0];
    if (a != 1) throw Error("phi: 13-window shares without car 1");
    if (b == 4) return 1;  // (I)
    if (b == 2) return 2;  // (II)
    return 3;              // (III)
}

ParkingFunction apply_relabel(const ParkingFunction& pf, int base, const std::vector<int>& image) {
    // image[c-1] = new relative label of old relative label c
    std::vector<int> labels = pf.labels;
    for (auto& l : labels) {
        int c = l - base;
        if (c >= 1 && c <= 4) l = base + image[c - 1];
    }
    return ParkingFunction(pf.path, labels);
}

std::optional<PatternInfo> first_pattern(const ParkingFunction& pf) {
    Composition pid = pides(pf);
    int base = 0;
    for (size_t i = 0; i + 1 < pid.size(); ++i) {
        if (pid[i] == 1 && pid[i + 1] == 3) {
            return PatternInfo{(int)i, base, true, subword_of(pf, base),
                               shared_columns(pf, base)};
        }
        if (pid[i] == 2 && pid[i + 1] == 2) {
            PatternInfo info{(int)i, base, false, subword_of(pf, base),
                             shared_columns(pf, base)};
            int pl = placement22(info.shared);
            bool fixed = info.word4 == "3412" ||
                         (info.word4 == "3142" && (pl == 1 || pl == 3 || pl == 4));
            if (!fixed) return info;
        }
        base += pid[i];
    }
    return std::nullopt;
}

}  // namespace

bool phi_is_fixed(const ParkingFunction& pf) { return !first_pattern(pf).has_value(); }

ParkingFunction phi(const ParkingFunction& pf) {
    if (pf.path.shape.m != 3) throw InvalidArgument("phi: defined on (3,n) parking functions");
    auto info = first_pattern(pf);
    if (!info) return pf;
    const auto& w = info->word4;
    if (info->is13) {
        int pl = placement13(info->shared);
        if (w == "2341" && pl == 1) return apply_relabel(pf, info->base, {2, 1, 3, 4});
        if (w == "2341" && pl == 2) return apply_relabel(pf, info->base, {2, 3, 1, 4});
        if (w == "2341" && pl == 3) return apply_relabel(pf, info->base, {2, 1, 3, 4});
        if (w == "2314" && pl == 2) return apply_relabel(pf, info->base, {2, 3, 1, 4});
        if (w == "2314" && pl == 3) return apply_relabel(pf, info->base, {2, 1, 3, 4});
        if (w == "2134" && pl == 2) return apply_relabel(pf, info->base, {1, 3, 2, 4});
        throw Error("phi: illegal 13-window word/placement " + w + "/" + std::to_string(pl));
    }
    int pl = placement22(info->shared);
    if (w == "3142" && pl == 5) return apply_relabel(pf, info->base, {3, 1, 2, 4});
    if (w == "3124" && pl == 4) return apply_relabel(pf, info->base, {1, 3, 2, 4});
    if (w == "3124" && pl == 5) return apply_relabel(pf, info->base, {3, 1, 2, 4});
    if (w == "1324" && pl == 5) return apply_relabel(pf, info->base, {2, 1, 3, 4});
    if (w == "1342" && pl == 3) return apply_relabel(pf, info->base, {2, 1, 3, 4});
    if (w == "1342" && pl == 5) return apply_relabel(pf, info->base, {2, 1, 3, 4});
    throw Error("phi: illegal 22-window word/placement " + w + "/" + std::to_string(pl));
}

std::set<int> reverse_complement(const std::set<int>& p, int m) {
    std::set<int> mirror;
    for (int s : p) {
        if (s < 1 || s > m) throw InvalidArgument("reverse_complement: column outside 1..m");
        mirror.insert(m + 1 - s);
    }
    std::set<int> out;
    for (int c = 1; c <= m; ++c)
        if (!mirror.count(c)) out.insert(c);
    return out;
}

Composition mu_vee(const Composition& mu, int m) {
    Composition out;
    for (auto it = mu.rbegin(); it != mu.rend(); ++it) {
        if (*it > m) throw InvalidArgument("mu_vee: part exceeds m");
        if (m - *it > 0) out.push_back(m - *it);
    }
    return out;
}

std::vector<std::set<int>> block_placements(const ParkingFunction& pf, const Composition& mu) {
    if (!word_is_shuffle_of(pf, mu))
        throw WordNotShuffleOfMu("block_placements: word is not a shuffle of mu");
    std::vector<int> colof(pf.cars() + 1);
    for (int y = 0; y < pf.cars(); ++y) colof[pf.labels[y]] = pf.path.col[y];
    std::vector<std::set<int>> out;
    int base = 0;
    for (int part : mu) {
        std::set<int> cols;
        for (int c = base + 1; c <= base + part; ++c) cols.insert(colof[c] + 1);
        if ((int)cols.size() != part) throw Error("block_placements: block cars share a column");
        out.push_back(std::move(cols));
        base += part;
    }
    return out;
}

ParkingFunction switch_m(const ParkingFunction& pf, const Composition& mu) {
    const int m = pf.path.shape.m;
    for (int part : mu)
        if (part < 1 || part > m - 1)
            throw InvalidArgument("switch_m: parts must lie in 1..m-1");
    auto placements = block_placements(pf, mu);
    const int k = (int)mu.size();
    std::vector<std::set<int>> np(k);
    for (int i = 0; i < k; ++i) np[i] = reverse_complement(placements[k - 1 - i], m);
    std::vector<int> count(m, 0);
    for (auto& p : np)
        for (int c : p) count[c - 1]++;
    std::vector<int> col;
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < count[j]; ++i) col.push_back(j);
    int n2 = (int)col.size();
    if (n2 != m * k - pf.cars()) throw Error("switch_m: size bookkeeping failed");
    DyckPath path(GridShape(m, n2), col);  // above-diagonal validity is the image theorem
    // blocks claim the lowest free cell of each of their columns in order;
    // each block's cars are placed rank-decreasing
    std::vector<long> ranks = step_ranks(path);
    std::vector<int> colstart(m, 0), used(m, 0);
    for (int j = 1; j < m; ++j) colstart[j] = colstart[j - 1] + count[j - 1];
    std::vector<int> labels(n2, 0);
    int car = 1;
    for (int i = 0; i < k; ++i) {
        std::vector<int> rows;
        for (int c : np[i]) rows.push_back(colstart[c - 1] + used[c - 1]++);
        std::sort(rows.begin(), rows.end(), [&](int a, int b) { return ranks[a] > ranks[b]; });
        for (int row : rows) labels[row] = car++;
    }
    return ParkingFunction(path, labels);
}

ParkingFunction switch3(const ParkingFunction& pf) {
    if (pf.path.shape.m != 3) throw InvalidArgument("switch3: shape must be (3,n)");
    Composition pid = pides(pf);
    size_t i = 0;
    int a = 0, b = 0;
    while (i < pid.size() && pid[i] == 2) {
        ++a;
        ++i;
    }
    while (i < pid.size() && pid[i] == 1) {
        ++b;
        ++i;
    }
    if (i != pid.size()) throw PidesNotTwoOneShape("switch3: pides must be 2^a 1^b");
    Composition mu;
    mu.insert(mu.end(), a, 2);
    mu.insert(mu.end(), b, 1);
    return switch_m(pf, mu);
}

}  // namespace rsl
