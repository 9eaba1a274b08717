// libFuzzer entry point: arbitrary bytes into the problem loader. Any
// exception other than evfuse::Error is a bug.
#include "evfuse/error.hpp"
#include "evfuse/problem_io.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>

extern "C" int LLVMFuzzerTestOneInput(const std::uint8_t* data, std::size_t size) {
    try {
        (void)evfuse::load_problem(std::string_view(reinterpret_cast<const char*>(data), size));
    } catch (const evfuse::Error&) {
    }
    return 0;
}
