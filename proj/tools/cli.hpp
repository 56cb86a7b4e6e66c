#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coxkit/report.hpp"

namespace coxkit::cli {

/// Runs the coxkit command line; args[0] is the program name. Returns the
/// process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Sections accepted by `verify-paper --section`.
const std::vector<std::string>& section_names();

/// Throws std::invalid_argument for an unknown section.
report::VerificationReport verify_section(const std::string& name, std::uint64_t seed);

/// Triangle examples plus self-consistency of the affine and finite catalogs
/// (ranks up to 10, also under random vertex relabelings).
report::VerificationReport verify_classification(std::uint64_t seed);

/// Free-rank values of the odd-subgraph formula on ~A_n and random even
/// diagrams.
report::VerificationReport verify_brink(std::uint64_t seed);

}  // namespace coxkit::cli
