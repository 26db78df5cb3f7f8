#pragma once

#include <stdexcept>
#include <string>

namespace onto {

enum class Errc {
    MalformedXml,
    NotWsdl,
    CorpusTooSmall,
    DuplicateServiceId,
    UnknownTerm,
    EmptyBag,
    NotAConflict,
    EmptyQuery,
    UnknownService,
    Io,
    Schema,
    Config,
    Usage,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::MalformedXml: return "MalformedXml";
    case Errc::NotWsdl: return "NotWsdl";
    case Errc::CorpusTooSmall: return "CorpusTooSmall";
    case Errc::DuplicateServiceId: return "DuplicateServiceId";
    case Errc::UnknownTerm: return "UnknownTerm";
    case Errc::EmptyBag: return "EmptyBag";
    case Errc::NotAConflict: return "NotAConflict";
    case Errc::EmptyQuery: return "EmptyQuery";
    case Errc::UnknownService: return "UnknownService";
    case Errc::Io: return "Io";
    case Errc::Schema: return "Schema";
    case Errc::Config: return "Config";
    case Errc::Usage: return "Usage";
    }
    return "Unknown";
}

// All recoverable failures surface as Error; the code tells callers (and the
// C boundary) how to classify it, the message names the offending file/field.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace onto
