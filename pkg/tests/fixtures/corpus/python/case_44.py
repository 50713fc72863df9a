def f_gold ( v ) :
    if ( v < 1 ) :
        return 1
    if ( v > 9 ) :
        return 9
    return v


if __name__ == '__main__' :
    print ( f_gold ( 42 ) )
