#ifndef LPA_REPORT_HPP
#define LPA_REPORT_HPP

#include <string>

#include "json.hpp"

#include "lpa/graph.hpp"
#include "lpa/ideals.hpp"
#include "lpa/verify.hpp"

namespace lpa {

inline constexpr int kReportFormatVersion = 1;

/// Machine-readable reports with stable field names. Every negative verdict
/// carries a witness and a `replay` hint naming the subcommand that
/// re-derives it. Reports contain no volatile data (timestamps, durations),
/// so equal inputs produce byte-equal output.
nlohmann::json classify_report(const Graph& g);
nlohmann::json pairs_report(const Graph& g, std::size_t cap = kDefaultEnumerationCap);
nlohmann::json lattice_report(const Graph& g, std::size_t cap = kDefaultEnumerationCap);
nlohmann::json verify_report(const Graph& g, const VerifyOptions& opts, const char* level);

std::string human_classify(const nlohmann::json& report);
std::string human_pairs(const nlohmann::json& report);
std::string human_lattice(const nlohmann::json& report);
std::string human_verify(const nlohmann::json& report);

/// Hasse diagram (cover relation) of the pair lattice, as DOT.
std::string lattice_hasse_dot(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

} // namespace lpa

#endif // LPA_REPORT_HPP
