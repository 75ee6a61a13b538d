#pragma once

#include "logalg/curve.hpp"
#include "logalg/modform.hpp"

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace logalg::cli {

enum class CoeffSource { EtaProduct, File, Inline };

/// Everything the tool needs to know about one curve. Text form, one
/// "key = value" per line, '#' comments:
///
///     name = 11a1
///     coefficients = 0 -1 1 -10 -20
///     conductor = 11
///     source = eta                  # or file:coeffs.txt, or inline
///     ap = 2:-2 3:-1 5:1 7:-2       # with source = inline
///     sign = +1
struct CurveSpec {
    std::string name;
    std::array<long, 5> a{}; // a1 a2 a3 a4 a6
    long conductor = 0;
    CoeffSource source = CoeffSource::EtaProduct;
    std::filesystem::path file;  // source = file, relative paths resolved against the spec file
    std::map<long, long> ap;     // source = inline
    int sign = 1;

    CurveModel model() const;
    /// a_n for n < count.
    NewformCoeffs coefficients(int count) const;
    std::string to_text() const;
};

/// Throws ParseError (with line numbers) and, for missing coefficient files, InvalidArgument.
CurveSpec parse_curve_spec(std::string_view text, const std::filesystem::path &base_dir = {});
CurveSpec load_curve_spec(const std::filesystem::path &path);

/// The curves shipped in the binary: builtin:11, builtin:14, ... one per eta-product level.
const std::vector<CurveSpec> &builtin_curves();

/// "builtin:N", a path to a spec file, or a name looked up as <name>.curve in
/// the registry directory (LOGALG_CURVE_DIR unless given). Throws InvalidArgument.
CurveSpec resolve_curve(std::string_view ref, const std::filesystem::path &registry_dir = {});

} // namespace logalg::cli
