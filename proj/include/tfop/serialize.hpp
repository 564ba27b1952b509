/*
 * File formats. Complex arrays travel as JSON objects
 *   {"n": N, "re": [...], "im": [...]}          (row-major for matrices)
 * with lattice-sized payloads adding their steps,
 *   {"n": N, "a": a, "b": b, "re": [...], "im": [...]}   (M x K masks).
 * Shift-grid operator specs are
 *   {"n", "b1", "nu1", "alpha": {"offsets": [[k,l],...],
 *    "values": {"re": [...], "im": [...]}}, "phi": <matrix or {"file": path}>}.
 *
 * Writing is deterministic: keys are emitted in sorted order and doubles
 * in shortest round-trip form. Canonical mode additionally rounds to 12
 * significant digits and flushes magnitudes below 1e-12 of the array peak
 * to zero, so analytically equal payloads compare byte-equal.
 */
#pragma once

#include "tfop/tst.hpp"
#include "tfop/types.hpp"

#include <json.hpp>

#include <string>

namespace tfop {

using Json = nlohmann::json;

Json vector_to_json(const CVec& v);
CVec vector_from_json(const Json& j);

Json matrix_to_json(const CMat& m);  // square, row-major
CMat matrix_from_json(const Json& j);

Json mask_to_json(const CMat& mask, const TFLattice& lat);
std::pair<CMat, TFLattice> mask_from_json(const Json& j);

/** Reads a TST spec; "phi" may be inline or {"file": path} relative to base_dir. */
TSTSpec tst_spec_from_json(const Json& j, const std::string& base_dir);

/** Rounds re/im payloads in place (12 significant digits, relative zero flush). */
void canonicalize(Json& j);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

/** "%.17g" — shortest exact decimal for CSV cells. */
std::string format_double(double x);

}  // namespace tfop
