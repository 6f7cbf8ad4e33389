#pragma once

#include <vector>

#include "wlc/system.hpp"

namespace wlc {

// Fixed mode sequence with its switching instants. Phase i runs from
// boundary(i) to boundary(i + 1), where boundary(0) = t0 and
// boundary(phase_count()) = tf. The incoming mode owns its switching instant.
struct ModeSchedule {
    std::vector<Mode> modes;
    std::vector<double> switch_times;
    double t0 = 0.0;
    double tf = 0.0;

    void validate() const;
    int phase_count() const { return static_cast<int>(modes.size()); }
    double boundary(int i) const;
    double phase_length(int i) const { return boundary(i + 1) - boundary(i); }
    int phase_at_time(double t) const;
    Mode mode_at_time(double t) const { return modes[static_cast<std::size_t>(phase_at_time(t))]; }

    // Backward, Stop, Forward, Stop.
    static ModeSchedule short_loading_cycle(double t0, double t1, double t2, double t3, double tf);
};

}  // namespace wlc
