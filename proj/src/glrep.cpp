#include "hdual/glrep.hpp"

#include <algorithm>
#include <set>

namespace hdual {

namespace {

std::vector<Segment> rho_part(const GLData& data, const CuspLabel& rho, std::vector<Segment>* rest) {
    std::vector<Segment> mine;
    for (const auto& s : data) {
        if (s.rho == rho)
            mine.push_back(s);
        else if (rest)
            rest->push_back(s);
    }
    return mine;
}

// Scan order for the left derivative: y ascending, ties x descending.
void sort_left(std::vector<Segment>& segs) {
    std::stable_sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
        if (a.y != b.y) return a.y < b.y;
        return a.x > b.x;
    });
}

// Scan order for the right derivative: the reverse of (x ascending, ties y descending).
void sort_right_scan(std::vector<Segment>& segs) {
    std::stable_sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
        if (a.x != b.x) return a.x > b.x;
        return a.y < b.y;
    });
}

// Positions reaching a new maximum of the running sum of +1 (close) / -1 (open).
std::vector<std::size_t> new_max_positions(const std::vector<int>& steps) {
    std::vector<std::size_t> picked;
    int run = 0, best = 0;
    for (std::size_t j = 0; j < steps.size(); ++j) {
        run += steps[j];
        if (run > best) {
            best = run;
            picked.push_back(j);
        }
    }
    return picked;
}

// Opens never matched by a later close, in scan order.
std::vector<std::size_t> free_opens(const std::vector<int>& steps) {
    std::vector<std::size_t> stack;
    for (std::size_t j = 0; j < steps.size(); ++j) {
        if (steps[j] < 0)
            stack.push_back(j);
        else if (steps[j] > 0 && !stack.empty())
            stack.pop_back();
    }
    return stack;
}

}  // namespace

bool segments_linked(const Segment& s1, const Segment& s2) {
    if (!(s1.rho == s2.rho) || !same_line(s1.x, s2.x)) return false;
    bool contains12 = s1.x >= s2.x && s1.y <= s2.y;
    bool contains21 = s2.x >= s1.x && s2.y <= s1.y;
    if (contains12 || contains21) return false;
    HalfInt lo = std::max(s1.y, s2.y);
    HalfInt hi = std::min(s1.x, s2.x);
    // union is a segment iff the two overlap or are adjacent
    return hi - lo >= HalfInt(-1);
}

GLDerivativeResult gl_left_highest(const GLData& data, const CuspLabel& rho, HalfInt x) {
    std::vector<Segment> rest;
    std::vector<Segment> mine = rho_part(data, rho, &rest);
    sort_left(mine);
    std::vector<int> steps(mine.size(), 0);
    for (std::size_t i = 0; i < mine.size(); ++i) {
        if (mine[i].x == x)
            steps[i] = 1;
        else if (mine[i].x == x - 1)
            steps[i] = -1;
    }
    auto picked = new_max_positions(steps);
    GLDerivativeResult r;
    r.order = static_cast<int>(picked.size());
    if (r.order == 0) {
        r.result = data;
        return r;
    }
    for (auto j : picked) mine[j].x -= 1;
    for (const auto& s : mine)
        if (s.x >= s.y) rest.push_back(s);
    r.result = GLData(std::move(rest));
    return r;
}

GLDerivativeResult gl_right_highest(const GLData& data, const CuspLabel& rho, HalfInt y) {
    std::vector<Segment> rest;
    std::vector<Segment> mine = rho_part(data, rho, &rest);
    sort_right_scan(mine);
    std::vector<int> steps(mine.size(), 0);
    for (std::size_t i = 0; i < mine.size(); ++i) {
        if (mine[i].y == y)
            steps[i] = 1;
        else if (mine[i].y == y + 1)
            steps[i] = -1;
    }
    auto picked = new_max_positions(steps);
    GLDerivativeResult r;
    r.order = static_cast<int>(picked.size());
    if (r.order == 0) {
        r.result = data;
        return r;
    }
    for (auto j : picked) mine[j].y += 1;
    for (const auto& s : mine)
        if (s.x >= s.y) rest.push_back(s);
    r.result = GLData(std::move(rest));
    return r;
}

GLData gl_left_underivative(const GLData& data, const CuspLabel& rho, HalfInt x, int k) {
    if (k <= 0) return data;
    std::vector<Segment> rest;
    std::vector<Segment> mine = rho_part(data, rho, &rest);
    sort_left(mine);
    std::vector<int> steps(mine.size(), 0);
    for (std::size_t i = 0; i < mine.size(); ++i) {
        if (mine[i].x == x)
            steps[i] = 1;
        else if (mine[i].x == x - 1)
            steps[i] = -1;
    }
    auto opens = free_opens(steps);
    int used = 0;
    for (auto j : opens) {
        if (used == k) break;
        mine[j].x += 1;
        ++used;
    }
    for (; used < k; ++used) mine.push_back(Segment{rho, x, x});
    rest.insert(rest.end(), mine.begin(), mine.end());
    return GLData(std::move(rest));
}

GLData gl_right_underivative(const GLData& data, const CuspLabel& rho, HalfInt y, int a) {
    if (a <= 0) return data;
    std::vector<Segment> rest;
    std::vector<Segment> mine = rho_part(data, rho, &rest);
    sort_right_scan(mine);
    std::vector<int> steps(mine.size(), 0);
    for (std::size_t i = 0; i < mine.size(); ++i) {
        if (mine[i].y == y)
            steps[i] = 1;
        else if (mine[i].y == y + 1)
            steps[i] = -1;
    }
    auto opens = free_opens(steps);
    int used = 0;
    for (auto j : opens) {
        if (used == a) break;
        mine[j].y -= 1;
        ++used;
    }
    for (; used < a; ++used) mine.push_back(Segment{rho, y, y});
    rest.insert(rest.end(), mine.begin(), mine.end());
    return GLData(std::move(rest));
}

bool is_ladder(const GLData& data, const CuspLabel& rho) {
    std::vector<Segment> mine = rho_part(data, rho, nullptr);
    if (mine.size() != data.size()) return false;
    std::sort(mine.begin(), mine.end(), [](const Segment& a, const Segment& b) { return a.x < b.x; });
    for (std::size_t i = 1; i < mine.size(); ++i) {
        if (!(mine[i - 1].x < mine[i].x) || !(mine[i - 1].y < mine[i].y)) return false;
        if (!same_line(mine[i - 1].x, mine[i].x)) return false;
    }
    return true;
}

namespace {

std::vector<Segment> ladder_sorted(const GLData& ladder, const CuspLabel& rho, const char* who) {
    if (!is_ladder(ladder, rho))
        throw Error(ErrorKind::not_a_ladder, std::string(who) + ": input is not a ladder");
    std::vector<Segment> segs(ladder.begin(), ladder.end());
    std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) { return a.x < b.x; });
    return segs;
}

}  // namespace

std::vector<LadderTerm> ladder_jacquet_left(const GLData& ladder, const CuspLabel& rho) {
    auto segs = ladder_sorted(ladder, rho, "ladder_jacquet_left");
    std::vector<LadderTerm> out;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (i > 0 && !(segs[i - 1].x < segs[i].x - 1)) continue;
        std::vector<Segment> rest = segs;
        if (segs[i].x == segs[i].y)
            rest.erase(rest.begin() + static_cast<long>(i));
        else
            rest[i].x -= 1;
        out.push_back({segs[i].x, GLData(std::move(rest))});
    }
    return out;
}

std::vector<LadderTerm> ladder_jacquet_right(const GLData& ladder, const CuspLabel& rho) {
    auto segs = ladder_sorted(ladder, rho, "ladder_jacquet_right");
    std::vector<LadderTerm> out;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (i + 1 < segs.size() && !(segs[i].y + 1 < segs[i + 1].y)) continue;
        std::vector<Segment> rest = segs;
        if (segs[i].x == segs[i].y)
            rest.erase(rest.begin() + static_cast<long>(i));
        else
            rest[i].y += 1;
        out.push_back({segs[i].y, GLData(std::move(rest))});
    }
    return out;
}

GLData gl_zelevinsky_dual(const GLData& data, const CuspLabel& rho) {
    std::vector<Segment> rest;
    rho_part(data, rho, &rest);
    GLData cur = data;
    std::vector<std::pair<HalfInt, int>> entries;
    const std::size_t guard = 4 * data.size() * data.size() + 8;
    while (true) {
        std::set<HalfInt> ends;
        for (const auto& s : cur)
            if (s.rho == rho) ends.insert(s.y);
        if (ends.empty()) break;
        bool moved = false;
        for (HalfInt y : ends) {
            auto r = gl_right_highest(cur, rho, y);
            if (r.order > 0) {
                entries.emplace_back(y, r.order);
                cur = std::move(r.result);
                moved = true;
                break;
            }
        }
        if (!moved || entries.size() > guard)
            throw Error(ErrorKind::internal, "gl_zelevinsky_dual: derivative sequence stalled");
    }
    // Split into maximal runs decreasing by one; a run contributes [x1, xj]^(kj - k(j+1)).
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i;
        while (j + 1 < entries.size() && entries[j + 1].first == entries[j].first - 1) ++j;
        HalfInt start = entries[i].first;
        for (std::size_t t = i; t <= j; ++t) {
            int next = (t < j) ? entries[t + 1].second : 0;
            int mult = entries[t].second - next;
            if (mult < 0)
                throw Error(ErrorKind::not_normalizable, "gl_zelevinsky_dual: orders increase inside a run");
            for (int c = 0; c < mult; ++c) rest.push_back(Segment{rho, start, entries[t].first});
        }
        i = j + 1;
    }
    return GLData(std::move(rest));
}

}  // namespace hdual
