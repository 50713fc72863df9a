def f_gold ( n ) :
    return n * n - 1


if __name__ == '__main__' :
    print ( f_gold ( 10 ) )
