#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace cwtool {

struct JobSpec {
    std::string command;
    nlohmann::json input;  // empty object when no input was given
    std::string mode = "frozen";
    int depth = 6;
    std::uint64_t seed = 20240601;
    bool plan_only = false;
};

// throws cw::Error; the caller maps kinds to exit codes
nlohmann::json run_job(const JobSpec& job);

}  // namespace cwtool
