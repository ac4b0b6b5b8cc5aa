#pragma once

#include <string>
#include <string_view>

namespace lapinit::testing {

/// True when fn() throws E whose message contains needle.
template <class E, class F>
bool throws_containing(F&& fn, std::string_view needle) {
    try {
        fn();
    } catch (const E& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    } catch (...) {
        return false;
    }
    return false;
}

}  // namespace lapinit::testing
