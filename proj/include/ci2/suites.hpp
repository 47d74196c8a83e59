#ifndef CI2_SUITES_HPP
#define CI2_SUITES_HPP

#include <string>
#include <vector>

#include "ci2/report.hpp"

namespace ci2 {

// Seeded randomized invariant battery for one module.  Identical
// (config, seed) gives an identical report modulo the timing field.
// Suites: algebra, euclid, deformation, hilbert, picard, contraction,
// git, curves.
Report run_suite(const RunConfig& cfg, const std::string& suite);

std::vector<std::string> suite_names();

} // namespace ci2

#endif
