#pragma once

#include "logalg/lvalues.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace logalg {

/// One named number in an example run. `expected` holds the published
/// reference value where there is one; `residual` is the distance to it or
/// the defect of an internal consistency check.
struct Quantity {
    std::string name;
    std::string value;
    std::optional<std::string> expected;
    std::optional<Real> residual;
    bool ok = true;
};

struct ExampleReport {
    std::string which;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<Quantity> intermediates;
    std::string exact_result;

    bool ok() const;
    /// Name of the first quantity that failed.
    std::optional<std::string> first_failure() const;
    const Quantity *find(std::string_view name) const;
};

struct ExampleOptions {
    int terms = 400;        // L(E, 1) partial sum
    int twist_terms = 2000; // twisted sums, which decay more slowly
    int series_prec = 600;  // X, Y, Phi known below q^series_prec
    long denom_bound = 60;  // for lattice multiples and point recognition
    Real line_tol = 1e-6L;  // relative, for lattice multiples
};

/// The strong Weil curve of conductor 11 used by the examples.
CurveModel level11_curve();

ExampleReport example_one(const ExampleOptions &opt = {});
ExampleReport example_two(const ExampleOptions &opt = {});
ExampleReport example_three(const ExampleOptions &opt = {});

/// "one", "two" or "three". Throws InvalidArgument otherwise.
ExampleReport run_example(std::string_view which, const ExampleOptions &opt = {});

} // namespace logalg
