def f_gold ( a , n ) :
    i = 0
    j = n - 1
    while ( i < j ) :
        if ( a [ i ] != a [ j ] ) :
            return False
        i += 1
        j -= 1
    return True


if __name__ == '__main__' :
    print ( f_gold ( [ 1 , 2 , 1 ] , 3 ) )
