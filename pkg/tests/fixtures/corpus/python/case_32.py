def f_gold ( n ) :
    if ( n > 0 ) :
        return 1
    elif ( n < 0 ) :
        return - 1
    else :
        return 0


if __name__ == '__main__' :
    print ( f_gold ( - 7 ) )
