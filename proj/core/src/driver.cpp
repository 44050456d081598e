#include "subsetc/driver.hpp"

#include <fstream>
#include <sstream>

#include "subsetc/interpreter.hpp"
#include "subsetc/lexer.hpp"
#include "subsetc/parser.hpp"
#include "subsetc/semantics.hpp"
#include "subsetc/toolchain.hpp"

namespace subsetc {

namespace {

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in{path, std::ios::binary};
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool write_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out{path, std::ios::binary};
    if (!out) return false;
    out << text;
    return static_cast<bool>(out);
}

}  // namespace

CompileResult compile(const CompileOptions& opts) {
    CompileResult result;

    auto source = read_file(opts.input);
    if (!source) {
        result.exit_code = kExitUsage;
        result.messages.push_back("cannot read input file '" + opts.input.string() + "'");
        return result;
    }

    LexResult lexed = tokenize(*source, opts.features);
    if (!lexed.ok()) {
        result.exit_code = kExitCompileError;
        result.diagnostics = std::move(lexed.diagnostics);
        return result;
    }

    ParseResult parsed = parse(lexed.tokens, opts.features);
    if (!parsed.ok()) {
        result.exit_code = kExitCompileError;
        result.diagnostics = std::move(parsed.diagnostics);
        return result;
    }

    DiagnosticList semantic = analyze(parsed.program, opts.features);
    if (!semantic.empty()) {
        result.exit_code = kExitCompileError;
        result.diagnostics = std::move(semantic);
        return result;
    }

    if (opts.interpret_only) {
        result.interpreted_value = interpret(parsed.program);
        return result;
    }

    GenResult generated = generate(parsed.program, opts.profile);
    if (!generated.ok()) {
        result.exit_code = kExitCompileError;
        result.diagnostics = std::move(generated.diagnostics);
        return result;
    }

    // everything checked out; only now touch the output directory
    std::error_code ec;
    std::filesystem::create_directories(opts.out_dir, ec);
    if (ec) {
        result.exit_code = kExitUsage;
        result.messages.push_back("cannot create output directory '" +
                                  opts.out_dir.string() + "'");
        return result;
    }

    const std::string stem = opts.input.stem().string();
    if (opts.dump_tokens) {
        result.tokens_path = opts.out_dir / (stem + ".tokens");
        std::string dump = render_token_dump(lexed.tokens);
        write_file(result.tokens_path, dump + "\n");
        result.dumps.push_back(std::move(dump));
    }
    if (opts.dump_ast) {
        result.ast_path = opts.out_dir / (stem + ".ast");
        std::string dump = render_ast(parsed.program);
        write_file(result.ast_path, dump + "\n");
        result.dumps.push_back(std::move(dump));
    }

    result.asm_path = opts.out_dir / (stem + ".asm");
    if (!write_file(result.asm_path, generated.assembly)) {
        result.exit_code = kExitUsage;
        result.messages.push_back("cannot write '" + result.asm_path.string() + "'");
        return result;
    }
    result.messages.push_back("Written " + result.asm_path.generic_string() + ".");
    if (opts.dump_asm) {
        result.dumps.push_back(generated.assembly);
    }

    if (detect_toolchain(opts.profile)) {
        AssembleLinkResult built =
            assemble_and_link(result.asm_path, opts.profile, opts.keep_intermediates);
        if (built.exit_code != 0) {
            result.exit_code = kExitToolchain;
            result.toolchain_output = built.tool_output;
            return result;
        }
        result.object_path = built.object_path;
        result.executable_path = built.executable_path;
    }

    return result;
}

}  // namespace subsetc
