#include "sandlab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace sandlab {

unsigned worker_count() {
    unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SANDPILE_LAB_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) workers = std::min(workers, static_cast<unsigned>(cap));
        } catch (const std::exception&) {
            // unparsable value: keep the hardware default
        }
    }
    return workers;
}

}  // namespace sandlab
