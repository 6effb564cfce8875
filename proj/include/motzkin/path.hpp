#ifndef MOTZKIN_PATH_HPP
#define MOTZKIN_PATH_HPP

// Explicit Motzkin paths and their profile statistics. A Motzkin path is a
// step sequence over {up, level, down} that stays at or above the axis and
// returns to it. The profile records the height (maximal altitude), whether
// a level step occurs at that altitude, and the resulting amplitude
// 2*height (+1 when such a level step exists).
//
// enumerate_paths is the brute-force ground truth: it walks all 3^n raw
// sequences and keeps the valid ones, so it is guarded against large n.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "motzkin/integer.hpp"

namespace motzkin {

enum class Step { up, level, down };

inline int increment(Step s) {
    switch (s) {
    case Step::up: return 1;
    case Step::down: return -1;
    default: return 0;
    }
}

struct Path {
    std::vector<Step> steps;

    std::size_t length() const { return steps.size(); }
};

struct PathProfile {
    std::size_t length = 0;
    unsigned height = 0;
    bool horizontal_at_max = false;
    unsigned amplitude = 0;
};

struct ClassCount {
    unsigned length = 0;
    unsigned height = 0;
    bool horizontal_at_max = false;
    Int count;
};

// Validates the path and computes its profile. The empty path has height 0,
// no horizontal step at the maximum, amplitude 0.
inline PathProfile profile(const Path& path) {
    long long altitude = 0;
    long long height = 0;
    bool horizontal_at_max = false;
    for (Step s : path.steps) {
        switch (s) {
        case Step::up:
            if (++altitude > height) {
                height = altitude;
                horizontal_at_max = false;
            }
            break;
        case Step::down:
            if (--altitude < 0)
                throw std::invalid_argument("profile: path dips below the axis");
            break;
        case Step::level:
            if (altitude == height)
                horizontal_at_max = true;
            break;
        }
    }
    if (altitude != 0)
        throw std::invalid_argument("profile: path does not return to the axis");
    PathProfile out;
    out.length = path.length();
    out.height = static_cast<unsigned>(height);
    out.horizontal_at_max = horizontal_at_max;
    out.amplitude = 2 * out.height + (horizontal_at_max ? 1 : 0);
    return out;
}

// 3^n sequences get scanned beyond this, so enumeration refuses larger n.
inline constexpr unsigned kMaxEnumerationLength = 16;

inline std::vector<Path> enumerate_paths(unsigned n) {
    if (n > kMaxEnumerationLength)
        throw std::invalid_argument("enumerate_paths: length exceeds the brute-force guard");
    static constexpr Step kStepOrder[3] = {Step::level, Step::up, Step::down};
    std::vector<Path> out;
    std::vector<unsigned char> digit(n, 0);
    std::vector<Step> steps(n, Step::level);
    for (;;) {
        long long altitude = 0;
        bool valid = true;
        for (unsigned i = 0; i < n && valid; ++i) {
            altitude += increment(steps[i]);
            valid = altitude >= 0;
        }
        if (valid && altitude == 0)
            out.push_back(Path{steps});
        unsigned i = 0;
        for (; i < n; ++i) {
            if (digit[i] < 2) {
                steps[i] = kStepOrder[++digit[i]];
                break;
            }
            digit[i] = 0;
            steps[i] = kStepOrder[0];
        }
        if (i == n)
            break;
    }
    return out;
}

} // namespace motzkin

#endif // MOTZKIN_PATH_HPP
