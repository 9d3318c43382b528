#include "gclab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gclab {

unsigned default_thread_count() {
    if (const char* env = std::getenv("GCLAB_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace gclab
