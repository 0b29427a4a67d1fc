#ifndef KMORPH_ERROR_HPP
#define KMORPH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kmorph {

enum class errc {
    // tag parsing
    unknown_general_tag,
    unknown_feature,
    unknown_feature_value,
    too_many_features,
    duplicate_feature,
    tag_syntax,
    // automaton
    cyclic_input,
    bad_magic,
    version_mismatch,
    truncated_input,
    checksum_mismatch,
    // path enumeration
    root_not_found,
    path_explosion,
    // annotation
    lexicon_not_loaded,
    unsupported_format,
    // generic
    io_error,
    invalid_argument,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace kmorph

#endif
