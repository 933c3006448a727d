#ifndef LIECLASS_CHECK_HPP
#define LIECLASS_CHECK_HPP

#include <stdexcept>
#include <string>

namespace lieclass {

// Internal invariant check that survives release builds.
inline void lc_check(bool cond, const std::string& what) {
    if (!cond) throw std::logic_error("internal invariant violated: " + what);
}

}  // namespace lieclass

#endif
