#pragma once

#include "braidlab/ydspace.hpp"

#include <map>
#include <optional>
#include <string>

namespace braidlab {

// Line-oriented `key = value` input files with bracketed [group], [space]
// and [task] sections.  Roots of unity are written zeta(m)^k, permutations
// in cycle notation, monomial generators as `(cycles) * diag(entries)`.
// Unknown keys are rejected; diagnostics carry line and column.
//
//   [group]
//   name = s3
//   points = 3
//   gen = (1 2)
//   gen = (2 3)
//
//   [space]
//   kind = rack            # rack | diagonal | yd
//   group = s3
//   elements = (1 2), (2 3), (1 3)
//   labels = x, y, z
//   signs = -1, -1         # optional twist per group generator
//
//   diagonal spaces use `row = zeta(3)^1, 1` (one per basis vector);
//   yd spaces give `degrees = ...` and one `action = [r; r; r]` per generator.
struct SpecTask {
    std::string task;
    std::map<std::string, std::string> options;  // e.g. max-degree
};

struct SpecFile {
    std::optional<std::string> group_name;
    FinGroupPtr group;
    std::optional<YDSpace> space;
    std::optional<SpecTask> task;
};

SpecFile parse_spec(const std::string& path, size_t group_cap = 20000);
SpecFile parse_spec_text(const std::string& text, size_t group_cap = 20000);

// Built-in example registry: "s3-rack", "s3-rack-sign", "zeta<N>" (N >= 2),
// "symmetric-swap".
YDSpace builtin_space(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace braidlab
