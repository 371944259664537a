#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "postpcp/normal_system.hpp"
#include "postpcp/pcp.hpp"
#include "postpcp/reductions.hpp"

// Line-oriented text formats. '#' starts a comment line; blank lines are
// ignored; words use serialize_word ("()" for the empty word).
//
//   normal system:   initial: <word>
//                    rule: <alpha> -> <beta>        (repeated, index = order)
//
//   PCP instance:    pair: <u> , <v>                (repeated, index = order)
//
//   artifact:        the instance, preceded by
//                    # method: new|post
//                    # source: <reference to the system file>
//                    # source-initial: <word>
//                    # source-rule: <alpha> -> <beta>
//                    # target: <word>
//                    # role <index>: <role>
//
// Parse errors throw ParseError with the offending line number.

namespace postpcp {

NormalSystem parse_normal_system(std::string_view text);
std::string format_normal_system(const NormalSystem& sys);

PcpInstance parse_instance(std::string_view text);
std::string format_instance(const PcpInstance& inst);

ReductionArtifact parse_artifact(std::string_view text);
std::string format_artifact(const ReductionArtifact& art, std::string_view source_ref);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

} // namespace postpcp
