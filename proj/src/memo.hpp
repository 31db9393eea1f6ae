#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "monocat/algebra.hpp"

namespace monocat::detail {

  inline std::string fingerprint(Matrix const& m) {
    std::string out = std::to_string(m.rows()) + "x" + std::to_string(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out += ',';
        out += m(i, j).to_string();
      }
    }
    return out;
  }

  inline std::string fingerprint(Module const& m) {
    std::string out = std::to_string(m.dim())
                      + (m.side() == Side::right ? "r" : "l");
    for (auto const& g : m.action().gens) {
      out += '|';
      out += fingerprint(g);
    }
    return out;
  }

  // Thread-safe cache of immutable values.  Values are computed outside the
  // lock, so recursive lookups into other memos cannot deadlock.
  template <typename Value>
  class Memo {
   public:
    template <typename Fn>
    std::shared_ptr<Value const> get(std::string const& key, Fn&& compute) const {
      {
        std::lock_guard<std::mutex> lock(_mutex);
        auto                        it = _cache.find(key);
        if (it != _cache.end()) {
          return it->second;
        }
      }
      auto value = std::make_shared<Value const>(compute());
      std::lock_guard<std::mutex> lock(_mutex);
      return _cache.emplace(key, std::move(value)).first->second;
    }

   private:
    mutable std::mutex                                           _mutex;
    mutable std::map<std::string, std::shared_ptr<Value const>> _cache;
  };

}  // namespace monocat::detail
