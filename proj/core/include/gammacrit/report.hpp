#pragma once

#include <string>

#include "gammacrit/criticality.hpp"
#include "gammacrit/families.hpp"

namespace gammacrit {

// JSON objects have sorted keys; edge sets serialise as [[u, v], ...].

std::string to_json(const FamilyInstance& f);
std::string to_json(const CriticalityReport& r);

}  // namespace gammacrit
