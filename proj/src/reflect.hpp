#pragma once

// Shared between eval.cpp and machine.cpp; not installed.

#include "prr/machine.hpp"

namespace prr::detail {

/// Leaf constants whose meaning does not involve running anything.
/// Returns nullopt for kinds that are not such leaves.
std::optional<Value> apply_leaf(const Term& t, const Value& v);

/// c-dot: complexity of an encoded configuration; non-configurations are
/// treated as halted (complexity 0).
Value reflect_cdot(const Value& v);
/// e-dot: one step of an encoded configuration, charged to `meter` one level
/// down. Non-configurations and halted ones are fixed points.
Value reflect_edot(const Value& v, FuelMeter& meter);

void charge(FuelMeter& meter);

}  // namespace prr::detail
