#include <hyperturan/limits.hpp>

#include <cstdlib>
#include <string>

namespace hyperturan {

auto Limits::current() -> Limits
{
    Limits limits;
    if (const char * raw = std::getenv("HYPERTURAN_MAX_N"); raw != nullptr && *raw != '\0') {
        try {
            auto value = static_cast<std::size_t>(std::stoul(raw));
            if (value > mask_capacity)
                value = mask_capacity;
            limits.chromatic_max_n = value;
            limits.deletion_family_max_n = value;
            limits.expansion_detector_max_n = value;
            limits.oracle_max_n = value;
            limits.rainbow_oracle_max_n = value;
            limits.stability_max_n = value;
            limits.gtz_inner_max_s = value;
        }
        catch (const std::exception &) {
            // malformed override: keep defaults
        }
    }
    return limits;
}

} // namespace hyperturan
