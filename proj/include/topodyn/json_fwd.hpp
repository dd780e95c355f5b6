#ifndef TOPODYN_JSON_FWD_HPP
#define TOPODYN_JSON_FWD_HPP

#include <json.hpp>

#endif
