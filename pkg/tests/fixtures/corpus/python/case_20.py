def f_gold ( n ) :
    c = 0
    i = 1
    j = n
    while ( i <= j ) :
        if ( i * j == n ) :
            c += 1
        i += 1
        j -= 1
    return c


if __name__ == '__main__' :
    print ( f_gold ( 12 ) )
