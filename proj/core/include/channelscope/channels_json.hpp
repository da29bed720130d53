#ifndef CHANNELSCOPE_CHANNELS_JSON_HPP
#define CHANNELSCOPE_CHANNELS_JSON_HPP

#include <string>

#include "channelscope/channels.hpp"

namespace chs {

/// Parse a channel-spec record, e.g.
///   {"family":"pauli","lambda":[0.7,0.1,0.1,0.1]}
///   {"family":"depolarizing","d":3,"lambda":0.5}
///   {"family":"custom_kraus","d":2,"kraus":[[[[re,im],...],...],...]}
///   {"family":"custom_affine","A":[[...],[...],[...]],"b":[...]}
/// Validation errors name the offending field and constraint.
ChannelSpec parse_spec(const std::string& text);

std::string spec_to_json(const ChannelSpec& spec);

}  // namespace chs

#endif
