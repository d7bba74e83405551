#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hypercolor {

/// Dynamic bitset over ground-set positions. All masks combined in one
/// expression must share the same bit width.
class VertexMask
{
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    VertexMask() = default;
    explicit VertexMask( std::size_t bits )
        : bits_( bits )
        , words_( ( bits + word_bits - 1 ) / word_bits, 0 )
    {}

    std::size_t width() const { return bits_; }

    void set( std::size_t pos ) { words_[pos / word_bits] |= word_type{ 1 } << ( pos % word_bits ); }
    void reset( std::size_t pos ) { words_[pos / word_bits] &= ~( word_type{ 1 } << ( pos % word_bits ) ); }
    bool test( std::size_t pos ) const { return ( words_[pos / word_bits] >> ( pos % word_bits ) ) & 1U; }

    std::size_t count() const
    {
        std::size_t total = 0;
        for ( word_type w : words_ )
            total += static_cast< std::size_t >( std::popcount( w ) );
        return total;
    }

    bool none() const
    {
        for ( word_type w : words_ )
            if ( w != 0 )
                return false;
        return true;
    }

    VertexMask& operator&=( const VertexMask& other )
    {
        for ( std::size_t i = 0; i < words_.size(); ++i )
            words_[i] &= other.words_[i];
        return *this;
    }

    VertexMask& operator|=( const VertexMask& other )
    {
        for ( std::size_t i = 0; i < words_.size(); ++i )
            words_[i] |= other.words_[i];
        return *this;
    }

    /// this \ other
    VertexMask& subtract( const VertexMask& other )
    {
        for ( std::size_t i = 0; i < words_.size(); ++i )
            words_[i] &= ~other.words_[i];
        return *this;
    }

    friend VertexMask operator&( VertexMask a, const VertexMask& b ) { return a &= b; }
    friend VertexMask operator|( VertexMask a, const VertexMask& b ) { return a |= b; }

    bool subset_of( const VertexMask& other ) const
    {
        for ( std::size_t i = 0; i < words_.size(); ++i )
            if ( words_[i] & ~other.words_[i] )
                return false;
        return true;
    }

    std::size_t intersection_count( const VertexMask& other ) const
    {
        std::size_t total = 0;
        for ( std::size_t i = 0; i < words_.size(); ++i )
            total += static_cast< std::size_t >( std::popcount( words_[i] & other.words_[i] ) );
        return total;
    }

    std::size_t union_count( const VertexMask& other ) const
    {
        std::size_t total = 0;
        for ( std::size_t i = 0; i < words_.size(); ++i )
            total += static_cast< std::size_t >( std::popcount( words_[i] | other.words_[i] ) );
        return total;
    }

    bool intersects( const VertexMask& other ) const
    {
        for ( std::size_t i = 0; i < words_.size(); ++i )
            if ( words_[i] & other.words_[i] )
                return true;
        return false;
    }

    /// Visits set positions in ascending order.
    template < typename Fn >
    void for_each( Fn&& fn ) const
    {
        for ( std::size_t i = 0; i < words_.size(); ++i ) {
            word_type w = words_[i];
            while ( w ) {
                const auto bit = static_cast< std::size_t >( std::countr_zero( w ) );
                fn( i * word_bits + bit );
                w &= w - 1;
            }
        }
    }

    friend bool operator==( const VertexMask&, const VertexMask& ) = default;

private:
    std::size_t bits_ = 0;
    std::vector< word_type > words_;
};

} // namespace hypercolor
