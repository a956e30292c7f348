#pragma once

#include <string>

#include <json.hpp>

#include "chevdv/dv.hpp"
#include "chevdv/stability.hpp"
#include "chevdv/steinberg.hpp"

namespace chevdv::cli {

// ordered_json keeps insertion order, so documents diff cleanly.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "chevdv/1";

Json header(const std::string& command);

Json root_json(const Root& r);
Json roots_json(const RootSystem& rs);
Json constants_json(const ChevalleySystem& sys);
Json diagram_json(const ChevalleySystem& sys);

/// A word as a list of "coeffs;param" strings, the word-file line format.
Json word_json(const SteinbergWord& w);
Json vec_json(const Vec& v);
Json mat_json(const Mat& m);
Json decomposition_json(const SteinbergWord& input, const DVDecomposition& d, bool certified);

}  // namespace chevdv::cli
