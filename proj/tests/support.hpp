#pragma once

#include "ewm/cases.hpp"

#include <string>

inline std::string case_path(const std::string& name) { return std::string(EWM_CASE_DIR) + "/" + name; }

inline ewm::CaseFile load_named(const std::string& name) { return ewm::load_case(case_path(name)); }

inline ewm::SphericalDatum datum_named(const std::string& name) { return *load_named(name).datum; }

inline ewm::Vec qv(std::initializer_list<long> xs) {
    ewm::Vec v;
    for (long x : xs) v.push_back(ewm::Q(x));
    return v;
}
