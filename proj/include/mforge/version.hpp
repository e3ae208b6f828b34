#pragma once

namespace mforge {

inline constexpr const char* kEngineVersion = "mforge/1.0.0";
inline constexpr const char* kDslGrammarVersion = "mforge-dsl/1";

}  // namespace mforge
