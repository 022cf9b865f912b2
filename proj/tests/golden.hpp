// Reference data transcribed from the published tables and examples.
#pragma once

#include <array>
#include <string>

namespace golden {

// Generator order of the n = 3 product table (row = left factor).
inline const std::array<std::string, 6> kTable3Order = {"id", "(132)", "(123)", "(12)", "(13)", "(23)"};

// Entry "p" means V(p)^t, "d p" means d V(p)^t.
inline const std::array<std::array<std::string, 6>, 6> kTable3 = {{
    {"id", "(132)", "(123)", "(12)", "(13)", "(23)"},
    {"(132)", "(132)", "d (23)", "(23)", "d (132)", "(23)"},
    {"(123)", "d (13)", "(123)", "(13)", "(13)", "d (123)"},
    {"(12)", "(13)", "(23)", "id", "(132)", "(123)"},
    {"(13)", "(13)", "d (123)", "(123)", "d (13)", "(123)"},
    {"(23)", "d (132)", "(23)", "(132)", "(132)", "d (23)"},
}};

} // namespace golden
