#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "subsetc/codegen.hpp"

namespace subsetc {

// Command templates with {in}/{out} placeholders, run through `sh -c`.
// `run_template` ({exe} placeholder) is set when the host can execute the
// produced binaries, possibly under an emulator.
struct Toolchain {
    std::string name;
    std::string assemble_template;
    std::string link_template;
    std::string run_template;

    bool can_execute() const { return !run_template.empty(); }
};

// Resolution order: the SUBSETC_TOOLCHAIN environment variable (a JSON
// object {"assemble": ..., "link": ..., "run": ...}), then the native
// assembler when the host matches the profile, then a clang cross build
// for the linux profile. nullopt when nothing can target the profile.
std::optional<Toolchain> detect_toolchain(const TargetProfile& profile);

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr interleaved
};

CommandResult run_command(const std::string& command);

struct AssembleLinkResult {
    int exit_code = 0;  // 0 ok, 3 toolchain failure
    std::string tool_output;
    std::filesystem::path object_path;
    std::filesystem::path executable_path;
};

// Assembles `asm_path` to `<stem>.o` and links `<stem>` next to it. The
// intermediate object is removed on success unless `keep_object` is set.
AssembleLinkResult assemble_and_link(const std::filesystem::path& asm_path,
                                     const TargetProfile& profile,
                                     bool keep_object = false);

// Runs an executable produced by assemble_and_link, honoring the
// toolchain's run template; returns the process exit status.
CommandResult run_executable(const std::filesystem::path& exe,
                             const Toolchain& toolchain);

}  // namespace subsetc
