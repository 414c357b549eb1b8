#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fae::ingest {

enum class FileLabel { Success, Fail, Unknown };

std::string to_string(FileLabel label);
FileLabel file_label_from(const std::string& text);

// One captured frame's summary row, as exported by an upstream dissector.
struct FrameRecord {
    int64_t no = 0;      // 1-based index as captured
    double time = 0.0;   // seconds since capture start
    std::string src;
    std::string dst;
    std::string protocol;
    int64_t length = 0;  // bytes on the wire
    std::string info;    // free-text message summary
};

struct CaptureSummary {
    std::string file_id;
    FileLabel label = FileLabel::Unknown;
    std::vector<FrameRecord> frames;
};

// Canonical (protocol, text) identity of a frame. Endpoints and volatile
// tokens are excluded so repeated runs of the same flow map to the same key.
struct Signature {
    std::string protocol;
    std::string text;
    auto operator<=>(const Signature&) const = default;
};

// Lowercases, maps every character outside [a-z0-9] to a space, collapses
// space runs and trims. With drop_volatile, tokens that are pure digits or
// dotted-quad addresses (run-specific identifiers) are removed as well.
std::string canonicalize(const std::string& info, bool drop_volatile);

Signature signature_of(const FrameRecord& frame);

// Whitespace split of canonical text.
std::vector<std::string> tokenize(const std::string& canonical_text);

// Summary JSON exchange format. Strict mode rejects unknown keys.
CaptureSummary parse_summary(const std::string& json_text, bool strict = true,
                             const std::string& origin = "<memory>");
CaptureSummary load_summary(const std::string& path, bool strict = true);
std::string dump_summary(const CaptureSummary& capture);
void save_summary(const CaptureSummary& capture, const std::string& path);

// Small file helpers shared across modules.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace fae::ingest
