def f_gold ( n ) :
    c = 0
    while ( n > 0 ) :
        if ( n % 10 == 0 ) :
            c += 1
        n = n // 10
    return c


if __name__ == '__main__' :
    print ( f_gold ( 70707 ) )
