def f_gold ( a , n ) :
    best = a [ 0 ]
    for i in range ( 1 , n ) :
        if ( a [ i ] > best ) :
            best = a [ i ]
    return best


if __name__ == '__main__' :
    print ( f_gold ( [ 3 , 11 , 2 , 7 ] , 4 ) )
