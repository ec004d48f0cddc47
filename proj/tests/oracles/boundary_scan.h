#ifndef AEROPLAN_TESTS_BOUNDARY_SCAN_H
#define AEROPLAN_TESTS_BOUNDARY_SCAN_H

#include <vector>

#include "aeroplan/network.h"

namespace aeroplan::oracle {

// Arrival time after sending size_bits over each consecutive pair of `hops`
// (network indices, no repeats) back to back at leakage theta. Each hop's end
// is found by bisection in time on the throughput functional. Returns +inf
// past `t_limit`.
double ScanEndTime(const Network& net, const std::vector<int>& hops, double theta,
                   double size_bits, double t_limit);

// Least theta whose back-to-back schedule finishes by the horizon, by
// bisection in log theta on whether the schedule ends by then.
double ThetaScan(const Network& net, const std::vector<int>& hops, double size_bits);

// min over interior split times of the worst single-hop weight, by nested
// bisection on the crossing of each split (at most three hops).
double SplitScan(const Network& net, const std::vector<int>& hops, double size_bits);

}  // namespace aeroplan::oracle

#endif
