// p7_main.cpp - command line frontend for the 7x7 square codec
//
// Subcommands: encode, decode, validate, square. Input and output default to
// the standard streams; all text I/O is UTF-8. Exit codes: 0 success, 1 data
// error (diagnostic on stderr), 2 usage error.
//
// encode and decode process their input in chunks: the only state carried
// across chunk boundaries is the normalizer's pending unit and one pending
// UPPER code, so input size is not bounded by memory.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "p7/p7.hpp"

namespace {

constexpr std::size_t kChunkSize = 64 * 1024;
constexpr std::size_t kFlushThreshold = 64 * 1024;

struct SquareOptions {
    std::string key;
    std::string square_file;
};

void add_square_options(CLI::App* cmd, SquareOptions& opts) {
    auto* key = cmd->add_option("--key", opts.key, "Keyword that mixes the square");
    auto* file = cmd->add_option("--square-file", opts.square_file,
                                 "Square layout file (49 token lines)");
    key->excludes(file);
    file->excludes(key);
}

// Usage-level failure: message on stderr, exit 2.
[[noreturn]] void usage_error(const std::string& message) {
    std::cerr << "p7: " << message << "\n";
    std::exit(2);
}

// Data-level failure: message on stderr, exit 1.
[[noreturn]] void data_error(const std::string& message) {
    std::cerr << "p7: " << message << "\n";
    std::exit(1);
}

p7::Square make_square(const SquareOptions& opts) {
    if (!opts.square_file.empty()) {
        std::ifstream in(opts.square_file, std::ios::binary);
        if (!in) usage_error("cannot open square file '" + opts.square_file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            return p7::parse_square_file(buf.str());
        } catch (const p7::SquareFileError& e) {
            usage_error(opts.square_file + ": " + e.what());
        }
    }
    if (!opts.key.empty()) return p7::square_from_keyword(opts.key);
    return p7::canonical_square();
}

p7::NormalizationPolicy parse_policy(const std::string& text) {
    if (text == "error") return p7::NormalizationPolicy::error();
    if (text == "skip") return p7::NormalizationPolicy::skip();
    if (text.rfind("replace=", 0) == 0) {
        auto name = text.substr(8);
        auto token = p7::token_from_name(name);
        if (!token) usage_error("unknown replacement token '" + name + "'");
        try {
            return p7::NormalizationPolicy::replace(*token);
        } catch (const std::invalid_argument& e) {
            usage_error(e.what());
        }
    }
    usage_error("invalid --on-unknown value '" + text + "' (expected error, skip or replace=TOKEN)");
}

class Input {
  public:
    explicit Input(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) usage_error("cannot open input file '" + path + "'");
            stream_ = &file_;
        } else {
            stream_ = &std::cin;
        }
    }

    // Returns false at end of input.
    bool next_chunk(std::string& chunk) {
        chunk.resize(kChunkSize);
        stream_->read(chunk.data(), static_cast<std::streamsize>(chunk.size()));
        chunk.resize(static_cast<std::size_t>(stream_->gcount()));
        return !chunk.empty();
    }

  private:
    std::ifstream file_;
    std::istream* stream_ = nullptr;
};

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) usage_error("cannot open output file '" + path + "'");
            stream_ = &file_;
        } else {
            stream_ = &std::cout;
        }
        buffer_.reserve(kFlushThreshold + 4096);
    }

    std::string& buffer() { return buffer_; }

    void flush_if_large() {
        if (buffer_.size() >= kFlushThreshold) flush();
    }

    void flush() {
        stream_->write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
        buffer_.clear();
    }

    void close() {
        flush();
        stream_->flush();
        if (!*stream_) data_error("write failed");
    }

  private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
    std::string buffer_;
};

void append_code(std::string& out, p7::Code c) {
    out += static_cast<char>('0' + c.row_digit());
    out += static_cast<char>('0' + c.col_digit());
}

int run_encode(const SquareOptions& square_opts, const std::string& policy_text, unsigned wrap,
               const std::string& in_path, const std::string& out_path) {
    p7::Square square = make_square(square_opts);
    p7::NormalizationPolicy policy = parse_policy(policy_text);
    Input in(in_path);
    Output out(out_path);
    p7::TextNormalizer normalizer(policy);
    std::vector<p7::Token> tokens;
    std::size_t emitted = 0;
    auto drain = [&] {
        for (p7::Token t : tokens) {
            if (emitted > 0) {
                out.buffer() += (wrap > 0 && emitted % wrap == 0) ? '\n' : ' ';
            }
            append_code(out.buffer(), p7::encode_token(square, t));
            ++emitted;
        }
        tokens.clear();
        out.flush_if_large();
    };
    try {
        std::string chunk;
        while (in.next_chunk(chunk)) {
            normalizer.feed(chunk, tokens);
            drain();
        }
        normalizer.finish(tokens);
        drain();
    } catch (const p7::UnknownCharacter& e) {
        data_error(e.what());
    }
    out.buffer() += '\n';
    out.close();
    if (normalizer.skipped_count() > 0) {
        std::cerr << "p7: " << normalizer.skipped_count() << " unmappable character(s) skipped\n";
    }
    if (normalizer.replaced_count() > 0) {
        std::cerr << "p7: " << normalizer.replaced_count() << " unmappable character(s) replaced\n";
    }
    return 0;
}

std::string violation_line(const p7::Violation& v) {
    return "index " + std::to_string(v.index) + ": " +
           std::string(p7::violation_rule_name(v.rule)) + " " + v.detail;
}

int run_decode(const SquareOptions& square_opts, const std::string& in_path,
               const std::string& out_path) {
    p7::Square square = make_square(square_opts);
    Input in(in_path);
    Output out(out_path);
    p7::CipherTextScanner scanner;
    p7::SequenceChecker checker(square);
    p7::TokenRenderer renderer;
    std::vector<p7::Code> codes;
    std::vector<p7::Violation> violations;
    auto drain = [&] {
        for (p7::Code c : codes) {
            checker.push(c, violations);
            if (!violations.empty()) {
                out.flush();
                data_error(violation_line(violations.front()));
            }
            renderer.push(square.token_at(c.position()), out.buffer());
        }
        codes.clear();
        out.flush_if_large();
    };
    try {
        std::string chunk;
        while (in.next_chunk(chunk)) {
            scanner.feed(chunk, codes);
            drain();
        }
        scanner.finish(codes);
        drain();
        checker.finish(violations);
        if (!violations.empty()) {
            out.flush();
            data_error(violation_line(violations.front()));
        }
        renderer.finish();
    } catch (const p7::MalformedNumber& e) {
        out.flush();
        data_error(e.what());
    }
    out.close();
    return 0;
}

int run_validate(const SquareOptions& square_opts, const std::string& in_path) {
    p7::Square square = make_square(square_opts);
    Input in(in_path);
    p7::CipherTextScanner scanner;
    p7::SequenceChecker checker(square);
    std::vector<p7::Code> codes;
    std::vector<p7::Violation> violations;
    try {
        std::string chunk;
        while (in.next_chunk(chunk)) {
            scanner.feed(chunk, codes);
            for (p7::Code c : codes) checker.push(c, violations);
            codes.clear();
        }
        scanner.finish(codes);
        for (p7::Code c : codes) checker.push(c, violations);
        checker.finish(violations);
    } catch (const p7::MalformedNumber& e) {
        data_error(e.what());
    }
    for (const auto& v : violations) std::cerr << violation_line(v) << "\n";
    return violations.empty() ? 0 : 1;
}

int run_square(const SquareOptions& square_opts, bool emit) {
    p7::Square square = make_square(square_opts);
    std::cout << (emit ? p7::format_square_file(square) : p7::format_square_grid(square));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    CLI::App app{"Lossless codec for Romanian text based on a 7x7 Polybius square.\n"
                 "A classroom substitution cipher; it offers no real secrecy."};
    app.require_subcommand(1);

    SquareOptions enc_square, dec_square, val_square, sq_square;
    std::string enc_policy = "error", enc_in, enc_out, dec_in, dec_out, val_in;
    unsigned wrap = 16;
    bool emit = false;

    auto* enc = app.add_subcommand("encode", "Encode UTF-8 text to two-digit numbers");
    add_square_options(enc, enc_square);
    enc->add_option("--on-unknown", enc_policy,
                    "Unmappable characters: error, skip or replace=TOKEN")
        ->capture_default_str();
    enc->add_option("--wrap", wrap, "Numbers per output line, 0 = single line")
        ->capture_default_str();
    enc->add_option("-o,--output", enc_out, "Output file (default stdout)");
    enc->add_option("input", enc_in, "Input file (default stdin)");

    auto* dec = app.add_subcommand("decode", "Decode two-digit numbers to text");
    add_square_options(dec, dec_square);
    dec->add_option("-o,--output", dec_out, "Output file (default stdout)");
    dec->add_option("input", dec_in, "Input file (default stdin)");

    auto* val = app.add_subcommand("validate", "Check a sequence for admissibility");
    add_square_options(val, val_square);
    val->add_option("input", val_in, "Input file (default stdin)");

    auto* sq = app.add_subcommand("square", "Show the 7x7 square");
    add_square_options(sq, sq_square);
    sq->add_flag("--emit", emit, "Write the 49-line square file instead of a grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (enc->parsed()) return run_encode(enc_square, enc_policy, wrap, enc_in, enc_out);
    if (dec->parsed()) return run_decode(dec_square, dec_in, dec_out);
    if (val->parsed()) return run_validate(val_square, val_in);
    if (sq->parsed()) return run_square(sq_square, emit);
    return 2;
}
