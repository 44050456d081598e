#include "subsetc/toolchain.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <sys/utsname.h>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace subsetc {

namespace {

std::string host_machine() {
    utsname info{};
    if (uname(&info) != 0) return {};
    return info.machine;
}

bool host_is_aarch64() {
    const std::string machine = host_machine();
    return machine == "aarch64" || machine == "arm64";
}

bool in_path(const std::string& tool) {
    const char* path = std::getenv("PATH");
    if (path == nullptr) return false;
    std::istringstream dirs{path};
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
        if (dir.empty()) continue;
        std::filesystem::path candidate = std::filesystem::path(dir) / tool;
        std::error_code ec;
        if (std::filesystem::exists(candidate, ec) &&
            ::access(candidate.c_str(), X_OK) == 0) {
            return true;
        }
    }
    return false;
}

std::string substitute(std::string text, std::string_view key, const std::string& value) {
    for (std::size_t at = text.find(key); at != std::string::npos; at = text.find(key)) {
        text.replace(at, key.size(), value);
    }
    return text;
}

std::optional<Toolchain> toolchain_from_env() {
    const char* spec = std::getenv("SUBSETC_TOOLCHAIN");
    if (spec == nullptr || *spec == '\0') return std::nullopt;
    auto parsed = nlohmann::json::parse(spec, nullptr, /*allow_exceptions=*/false);
    if (!parsed.is_object()) return std::nullopt;
    auto text_field = [&](const char* key) -> std::optional<std::string> {
        if (!parsed.contains(key) || !parsed[key].is_string()) return std::nullopt;
        return parsed[key].get<std::string>();
    };
    auto assemble = text_field("assemble");
    auto link = text_field("link");
    if (!assemble || !link) return std::nullopt;
    Toolchain tc;
    tc.name = "custom";
    tc.assemble_template = *assemble;
    tc.link_template = *link;
    tc.run_template = text_field("run").value_or("");
    return tc;
}

}  // namespace

std::optional<Toolchain> detect_toolchain(const TargetProfile& profile) {
    if (auto custom = toolchain_from_env()) return custom;

#if defined(__APPLE__)
    const bool host_matches = profile.os == TargetOs::Darwin;
#else
    const bool host_matches = profile.os == TargetOs::Linux;
#endif

    if (host_matches && host_is_aarch64() && in_path("as") && in_path("cc")) {
        Toolchain tc;
        tc.name = "native";
        tc.assemble_template = "as {in} -o {out}";
        tc.link_template = "cc {in} -o {out}";
        tc.run_template = "{exe}";
        return tc;
    }

    // clang's integrated assembler plus lld can target aarch64-linux from
    // any host; the result only runs when the host is aarch64
    if (profile.os == TargetOs::Linux && in_path("clang") && in_path("ld.lld")) {
        Toolchain tc;
        tc.name = "clang-cross";
        tc.assemble_template = "clang --target=aarch64-linux-gnu -c {in} -o {out}";
        tc.link_template = "clang --target=aarch64-linux-gnu -fuse-ld=lld -nostdlib "
                           "-static -Wl,-e," + profile.entry_symbol + " {in} -o {out}";
        if (host_is_aarch64()) tc.run_template = "{exe}";
        return tc;
    }

    return std::nullopt;
}

CommandResult run_command(const std::string& command) {
    CommandResult result;
    const std::string wrapped = command + " 2>&1";
    FILE* pipe = ::popen(wrapped.c_str(), "r");
    if (pipe == nullptr) {
        result.output = "failed to spawn: " + command;
        return result;
    }
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), n);
    }
    const int status = ::pclose(pipe);
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    } else {
        result.exit_code = -1;
    }
    return result;
}

AssembleLinkResult assemble_and_link(const std::filesystem::path& asm_path,
                                     const TargetProfile& profile,
                                     bool keep_object) {
    AssembleLinkResult result;
    auto toolchain = detect_toolchain(profile);
    if (!toolchain) {
        result.exit_code = 3;
        result.tool_output = "toolchain unavailable for target '" + profile.name + "'";
        return result;
    }

    std::filesystem::path object = asm_path;
    object.replace_extension(".o");
    std::filesystem::path executable = asm_path;
    executable.replace_extension("");

    std::string assemble = substitute(toolchain->assemble_template, "{in}", asm_path.string());
    assemble = substitute(assemble, "{out}", object.string());
    CommandResult assembled = run_command(assemble);
    if (assembled.exit_code != 0) {
        std::error_code ec;
        std::filesystem::remove(object, ec);
        result.exit_code = 3;
        result.tool_output = assembled.output;
        return result;
    }

    std::string link = substitute(toolchain->link_template, "{in}", object.string());
    link = substitute(link, "{out}", executable.string());
    CommandResult linked = run_command(link);
    if (linked.exit_code != 0) {
        std::error_code ec;
        std::filesystem::remove(executable, ec);
        if (!keep_object) std::filesystem::remove(object, ec);
        result.exit_code = 3;
        result.tool_output = linked.output;
        return result;
    }

    if (!keep_object) {
        std::error_code ec;
        std::filesystem::remove(object, ec);
    } else {
        result.object_path = object;
    }
    result.executable_path = executable;
    return result;
}

CommandResult run_executable(const std::filesystem::path& exe, const Toolchain& toolchain) {
    std::string command = substitute(toolchain.run_template, "{exe}", exe.string());
    return run_command(command);
}

}  // namespace subsetc
