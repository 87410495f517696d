#pragma once

#include "binclass/vakil.hpp"

#include <string>

namespace binclass {

/// Columns a,k,t_k4,pair_a,pair_k,delta,bracket,skip; empty cells for absent values.
std::string table_csv(const DeltaTable& t, int radix = 10);
std::string table_json(const DeltaTable& t, int radix = 10);
/// Human-readable layout with abbreviated brackets such as [1,1,0,…,0].
std::string table_pretty(const DeltaTable& t, int radix = 10);

/// Written entries up to the last nonzero one, then ",0,…,0" if zeros follow.
std::string abbreviated_bracket(const Bracket& b);

std::string format_integer(const Integer& v, int radix);

}  // namespace binclass
