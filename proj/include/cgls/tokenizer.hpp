#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cgls {

// Byte-level tokenizer: token ids 0..255 are raw bytes, 256 is the reserved
// pad token (emitted only by the batch sampler, never by encode()).
struct ByteTokenizer {
    static constexpr std::int32_t pad_token = 256;
    static constexpr std::int32_t vocab_size = 257;

    static std::vector<std::int32_t> encode(std::string_view text) {
        std::vector<std::int32_t> out;
        out.reserve(text.size());
        for (unsigned char c : text) out.push_back(static_cast<std::int32_t>(c));
        return out;
    }

    static std::string decode(const std::vector<std::int32_t>& tokens) {
        std::string out;
        out.reserve(tokens.size());
        for (std::int32_t t : tokens) {
            if (t >= 0 && t < 256) out.push_back(static_cast<char>(static_cast<unsigned char>(t)));
        }
        return out;
    }
};

}  // namespace cgls
