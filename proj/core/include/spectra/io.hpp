#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spectra/constants.hpp"
#include "spectra/ensemble.hpp"
#include "spectra/gallery.hpp"
#include "spectra/jacobi.hpp"
#include "spectra/report.hpp"

namespace spectra {

/// 17 significant digits; round-trips every finite double.
std::string format_double(double x);

/// {"dim": n, "data": [[re, im], ...]} in row-major order.
nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IneqReport& r);
nlohmann::json to_json(const FailInstance& f);

/// {"support": S, "a": [[re, im], ...], "b": ..., "c": ..., "trunc": N}; trunc
/// optional. Unknown fields and malformed entries are ConfigErrors.
nlohmann::json jacobi_spec_to_json(const JacobiSpec& spec);
JacobiSpec jacobi_spec_from_json(const nlohmann::json& j);

/// Joins already-formatted fields; fields containing a comma or quote are quoted.
std::string csv_line(const std::vector<std::string>& fields);

std::string gallery_csv_header();
std::string gallery_csv_row(const GalleryCase& g);

std::string report_csv_header();
std::string report_csv_row(const IneqReport& r);

std::string ensemble_csv_header();
std::string ensemble_csv_row(const EnsembleSummary& s);

std::string constants_csv_header();
std::string constants_csv_row(int d, double p, double kappa, const DualEval& c0v, const DualEval& c1v);

std::string stability_csv_header();
std::string stability_csv_row(const StabilityRow& r);

}  // namespace spectra
