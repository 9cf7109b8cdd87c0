#pragma once

#include "engine.hpp"

#include <p5hom/family.hpp>

#include <vector>

namespace p5hom::detail {

/// Top-level family construction, spreading the (colors, dominators, assignment) tasks over
/// opts.parallel engines and merging their output in task order.
std::vector<FamilyEntry> run_family(Engine & engine, const Instance & inst, const SolverOptions & opts);

Family to_family(const Instance & inst, const Engine & engine, const std::vector<FamilyEntry> & entries);

}
