#include "pottslist/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pottslist {

std::size_t thread_budget() {
    if (const char* env = std::getenv("POTTSLIST_THREADS")) {
        try {
            long n = std::stol(env);
            if (n > 0) return static_cast<std::size_t>(n);
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace pottslist
