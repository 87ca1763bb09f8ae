#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace laserep
{
// Evaluate f(0..n-1) on up to `threads` workers; results keep index order
template<class T, class F>
std::vector<T> parallel_map(std::size_t n, int threads, F&& f)
{
    std::vector<T> out(n);
    std::size_t const workers
        = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = f(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++)
        {
            try
            {
                out[i] = f(i);
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
    for (auto const& e : errors)
    {
        if (e)
            std::rethrow_exception(e);
    }
    return out;
}
}  // namespace laserep
