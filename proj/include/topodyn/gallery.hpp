#ifndef TOPODYN_GALLERY_HPP
#define TOPODYN_GALLERY_HPP

#include <string>

#include "topodyn/json_fwd.hpp"

namespace topodyn::gallery {

struct UnknownFixture : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixture names: ex1, ex002, ex06, ex04.
nlohmann::ordered_json report(const std::string& name);

// The committed expected report (ex04 commits tolerances instead of floats).
nlohmann::ordered_json expected(const std::string& name);

struct DiffResult {
    bool match = false;
    std::string detail;
};

// Exact diff for ex1/ex002/ex06; tolerance validation for ex04.
DiffResult diff(const std::string& name);

}  // namespace topodyn::gallery

#endif
